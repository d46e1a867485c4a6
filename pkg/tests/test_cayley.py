"""Cayley graph construction and induced vertex permutations."""
import pytest

from circulant_lab import fixtures
from circulant_lab.cayley import (
    automorphism_from_group_automorphism,
    cayley_graph,
    left_translation,
)
from circulant_lab.errors import ElementOutsideR, IdentityInS, NotInverseClosed, PhiDoesNotPreserveS
from circulant_lab.graphio import girth, is_connected, is_cubic
from circulant_lab.papergroups import even_group, odd_group
from circulant_lab.perm import cycle_structure, identity, is_semiregular
from helpers import brute_force_isomorphic


def test_odd_k1_is_k33():
    G = odd_group(1)
    graph, labeling = cayley_graph(G, G.connection_set())
    assert graph.n == 6
    assert is_cubic(graph) and is_connected(graph)
    assert brute_force_isomorphic(graph, fixtures.load("k33"))
    assert labeling.element_of_vertex[0] == G.identity()


def test_even_1_7_is_heawood_sized():
    G = even_group(1, 7)
    graph, _ = cayley_graph(G, G.connection_set())
    assert graph.n == 14
    assert is_cubic(graph) and is_connected(graph)
    assert girth(graph) == 6


@pytest.mark.parametrize("k,n", [(1, 6), (3, 54), (5, 150)])
def test_odd_orders(k, n):
    G = odd_group(k)
    graph, _ = cayley_graph(G, G.connection_set())
    assert graph.n == n == G.r_order


@pytest.mark.parametrize("m,p,n", [(1, 7, 14), (2, 7, 56), (3, 7, 42), (1, 13, 26)])
def test_even_orders(m, p, n):
    # index-3 subgroup shows up exactly when 3 | m
    G = even_group(m, p)
    graph, _ = cayley_graph(G, G.connection_set())
    assert graph.n == n


def test_left_translation_identity():
    G = odd_group(3)
    _, labeling = cayley_graph(G, G.connection_set())
    assert left_translation(G, labeling, G.identity()) == identity(labeling.n)


def test_left_translation_fixed_point_free():
    G = even_group(2, 7)
    graph, labeling = cayley_graph(G, G.connection_set())
    for g in list(G.all_elements())[:25]:
        if g == G.identity():
            continue
        perm = left_translation(G, labeling, g)
        assert all(perm[v] != v for v in range(graph.n))


def test_left_translation_by_y_at_k1():
    # at k = 1 translation by y is a perfect matching: order 2, semiregular
    G = odd_group(1)
    _, labeling = cayley_graph(G, G.connection_set())
    perm = left_translation(G, labeling, G.element(0, 0, 0, 1))
    cs = cycle_structure(perm)
    assert cs.element_order == 2
    assert is_semiregular(perm)


def test_left_translation_outside_r():
    G = odd_group(3)
    _, labeling = cayley_graph(G, G.connection_set())
    with pytest.raises(ElementOutsideR):
        left_translation(G, labeling, G.element(0, 0, 0, 1, 1))  # y sigma not in R


def test_induced_y_fixes_identity_vertex():
    G = even_group(1, 7)
    S = G.connection_set()
    _, labeling = cayley_graph(G, S)
    perm = automorphism_from_group_automorphism(G, labeling, G.apply_y, S)
    assert perm[0] == 0
    assert cycle_structure(perm).element_order == 3


def test_induced_sigma_rotates_neighbors_of_identity():
    G = odd_group(5)
    S = G.connection_set()
    graph, labeling = cayley_graph(G, S)
    perm = automorphism_from_group_automorphism(G, labeling, G.apply_sigma, S)
    assert perm[0] == 0
    nbrs = graph.adjacency[0]
    images = tuple(sorted(perm[v] for v in nbrs))
    assert images == nbrs
    assert all(perm[v] != v for v in nbrs)  # 3-cycle on the neighbors


def test_induced_identity_map():
    G = odd_group(3)
    S = G.connection_set()
    _, labeling = cayley_graph(G, S)
    perm = automorphism_from_group_automorphism(G, labeling, lambda g: g, S)
    assert perm == identity(labeling.n)


def test_translations_preserve_adjacency():
    G = even_group(2, 7)
    graph, labeling = cayley_graph(G, G.connection_set())
    for s in G.connection_set():
        perm = left_translation(G, labeling, s)
        for u, v in graph.edges():
            assert perm[v] in graph.adjacency[perm[u]]


def test_identity_in_s_rejected():
    G = odd_group(3)
    with pytest.raises(IdentityInS):
        cayley_graph(G, (G.identity(),) + G.connection_set()[:2])


def test_not_inverse_closed_rejected():
    # u has order 3 at k = 3, so {u} is not inverse-closed
    G = odd_group(3)
    with pytest.raises(NotInverseClosed):
        cayley_graph(G, (G.element(1, 0, 0, 0),))


def test_phi_not_preserving_s_rejected():
    G = odd_group(3)
    S = G.connection_set()
    _, labeling = cayley_graph(G, S)
    shift = G.element(1, 0, 0, 0)
    with pytest.raises(PhiDoesNotPreserveS):
        automorphism_from_group_automorphism(G, labeling, lambda g: G.mul(shift, g), S)


def test_deterministic_construction():
    G = odd_group(5)
    g1, l1 = cayley_graph(G, G.connection_set())
    g2, l2 = cayley_graph(G, G.connection_set())
    assert g1 == g2
    assert l1.element_of_vertex == l2.element_of_vertex
