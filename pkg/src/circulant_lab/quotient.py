"""Quotients by orbit partitions, the regular-cover predicate, and the
divisibility harness for induced actions on orbits.

Quotients are simple graphs: edges inside one orbit never become loops but
are reported through a flag instead, since the cover machinery only uses the
loop-free case.  Orbit indices are ordered by smallest contained vertex.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from circulant_lab import _kernels as kern
from circulant_lab import graphio
from circulant_lab.errors import (
    DoesNotPreservePartition,
    HypothesisViolated,
    NotAutomorphisms,
)
from circulant_lab.perm import (
    PermGroup,
    Permutation,
    compose,
    cycle_structure,
    inverse,
    is_semiregular,
)


@dataclass(frozen=True)
class QuotientResult:
    quotient: graphio.Graph
    orbit_map: tuple[int, ...]
    is_regular_cover: bool
    has_intra_orbit_edges: bool


def _check_automorphisms(graph: graphio.Graph, group: PermGroup) -> None:
    ptr, flat = kern.build_csr(graph.adjacency)
    for g in group.generators:
        if g.degree != graph.n or not kern.preserves_adjacency(ptr, flat, list(g.images)):
            raise NotAutomorphisms(f"generator {g} does not preserve adjacency")


def quotient_graph(graph: graphio.Graph, subgroup: PermGroup) -> QuotientResult:
    """Quotient of the graph by the subgroup's orbit partition.

    The cover flag is the definitional local-bijection test: the projection
    restricted to each neighborhood must be a bijection onto the quotient
    neighborhood.
    """
    _check_automorphisms(graph, subgroup)
    orbits = subgroup.orbits()
    orbit_map = [0] * graph.n
    for idx, orbit in enumerate(orbits):
        for v in orbit:
            orbit_map[v] = idx
    edges = set()
    intra = False
    for u, v in graph.edges():
        ou, ov = orbit_map[u], orbit_map[v]
        if ou == ov:
            intra = True
        else:
            edges.add((min(ou, ov), max(ou, ov)))
    quotient = graphio.from_edges(len(orbits), sorted(edges))

    cover = True
    for v in range(graph.n):
        nbr_orbits = [orbit_map[u] for u in graph.adjacency[v]]
        if len(set(nbr_orbits)) != len(nbr_orbits):
            cover = False
            break
        if set(nbr_orbits) != set(quotient.adjacency[orbit_map[v]]):
            cover = False
            break
    return QuotientResult(quotient, tuple(orbit_map), cover, intra)


def induced_action(c: Permutation, subgroup: PermGroup) -> Permutation:
    """The permutation c induces on the subgroup's orbits.

    Raises DoesNotPreservePartition unless c maps orbits onto orbits.
    """
    orbits = subgroup.orbits()
    n = subgroup.degree
    if c.degree != n:
        raise DoesNotPreservePartition(f"degree {c.degree} differs from {n}")
    orbit_map = [0] * n
    for idx, orbit in enumerate(orbits):
        for v in orbit:
            orbit_map[v] = idx
    images = []
    for orbit in orbits:
        targets = {orbit_map[c[v]] for v in orbit}
        if len(targets) != 1:
            raise DoesNotPreservePartition(f"orbit {orbit} is split by the permutation")
        target = targets.pop()
        if len(orbits[target]) != len(orbit):
            raise DoesNotPreservePartition(f"orbit {orbit} maps onto a different-sized orbit")
        images.append(target)
    return Permutation(tuple(images))


@dataclass(frozen=True)
class LemmaVerdict:
    k: int
    k_prime: int
    passed: bool


def induced_semiregular_harness(graph: graphio.Graph, c: Permutation,
                                normal_subgroup: PermGroup, group: PermGroup) -> LemmaVerdict:
    """Check that the action induced by a semiregular c on the orbits of a
    normal subgroup (of order coprime to the vertex stabiliser) is again
    semiregular, with an orbit count dividing the original one.

    Hypotheses are verified first and raise HypothesisViolated naming the
    failing clause; the conclusion is reported in the verdict.
    """
    _check_automorphisms(graph, group)
    n = graph.n
    if len(group.orbits()) != 1:
        raise HypothesisViolated("transitivity")
    if not group.contains(c):
        raise HypothesisViolated("containment of c in G")
    for h in normal_subgroup.generators:
        if not group.contains(h):
            raise HypothesisViolated("containment of N in G")
    for g in group.generators:
        g_inv = inverse(g)
        for h in normal_subgroup.generators:
            conj = compose(compose(g_inv, h), g)
            if not normal_subgroup.contains(conj):
                raise HypothesisViolated("normality")
    if not is_semiregular(c):
        raise HypothesisViolated("semiregularity of C")
    stab_order = group.order() // n
    if math.gcd(normal_subgroup.order(), stab_order) != 1:
        raise HypothesisViolated("coprimality")

    k = n // cycle_structure(c).element_order
    induced = induced_action(c, normal_subgroup)
    if not is_semiregular(induced):
        return LemmaVerdict(k, -1, False)
    k_prime = induced.degree // cycle_structure(induced).element_order
    return LemmaVerdict(k, k_prime, k % k_prime == 0)
