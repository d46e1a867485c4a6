"""Permutation arithmetic and stabilizer-chain queries."""
import random

import pytest

from circulant_lab.errors import CapExceeded, DegreeMismatch
from circulant_lab.perm import (
    PermGroup,
    Permutation,
    compose,
    cycle_structure,
    from_cycle_string,
    identity,
    inverse,
    is_semiregular,
    power,
    to_cycle_string,
)


def P(cycles: str, degree: int) -> Permutation:
    return from_cycle_string(cycles, degree)


def test_compose_identity():
    c4 = P("(0 1 2 3)", 4)
    assert compose(identity(4), c4) == c4
    assert compose(c4, identity(4)) == c4


def test_involution_squares_to_identity():
    inv = P("(0 1)(2 3)", 4)
    assert compose(inv, inv) == identity(4)


def test_compose_convention_pinned():
    # (0 1 2) then (0 1): 0->1->0, 1->2->2, 2->0->1; this test fixes the
    # left-to-right convention for the whole package
    p = P("(0 1 2)", 3)
    q = P("(0 1)", 3)
    assert compose(p, q).images == (0, 2, 1)
    # and the reverse order differs
    assert compose(q, p).images == (2, 1, 0)


def test_inverse_two_sided():
    rng = random.Random(7)
    for _ in range(25):
        n = rng.randrange(1, 30)
        images = list(range(n))
        rng.shuffle(images)
        p = Permutation(tuple(images))
        assert compose(p, inverse(p)) == identity(n)
        assert compose(inverse(p), p) == identity(n)


def test_compose_associative_on_random_triples():
    rng = random.Random(11)
    for _ in range(25):
        n = rng.randrange(1, 25)
        ps = []
        for _ in range(3):
            im = list(range(n))
            rng.shuffle(im)
            ps.append(Permutation(tuple(im)))
        a, b, c = ps
        assert compose(compose(a, b), c) == compose(a, compose(b, c))


def test_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        compose(identity(3), identity(4))


def test_cycle_structure_examples():
    assert cycle_structure(identity(6)) == (cycle_structure(identity(6)))
    cs = cycle_structure(identity(6))
    assert cs.cycle_lengths == (1,) * 6 and cs.element_order == 1
    cs = cycle_structure(P("(0 1 2)(3 4 5)", 6))
    assert cs.cycle_lengths == (3, 3) and cs.element_order == 3
    cs = cycle_structure(P("(0 1)", 4))
    assert cs.cycle_lengths == (1, 1, 2) and cs.element_order == 2


def test_is_semiregular_examples():
    assert is_semiregular(P("(0 1 2)(3 4 5)", 6))
    assert not is_semiregular(P("(0 1)", 4))
    assert is_semiregular(identity(5))


def test_semiregular_matches_orbit_criterion():
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randrange(1, 20)
        im = list(range(n))
        rng.shuffle(im)
        p = Permutation(tuple(im))
        cs = cycle_structure(p)
        expected = all(ln == cs.element_order for ln in cs.cycle_lengths)
        assert is_semiregular(p) == expected


def test_power():
    c = P("(0 1 2 3 4)", 5)
    assert power(c, 5) == identity(5)
    assert power(c, -1) == inverse(c)
    assert power(c, 7) == compose(c, c)


def test_cycle_string_round_trip():
    rng = random.Random(5)
    for _ in range(30):
        n = rng.randrange(1, 15)
        im = list(range(n))
        rng.shuffle(im)
        p = Permutation(tuple(im))
        assert from_cycle_string(to_cycle_string(p), n) == p
    assert to_cycle_string(identity(4)) == "()"


def test_group_order_sym4():
    g = PermGroup(4, [P("(0 1 2 3)", 4), P("(0 1)", 4)])
    assert g.order() == 24


def test_group_order_trivial():
    assert PermGroup(5, []).order() == 1
    assert PermGroup(0, []).order() == 1
    assert PermGroup(1, []).order() == 1


def test_orbits():
    g = PermGroup(4, [P("(0 1)(2 3)", 4)])
    assert g.orbits() == [[0, 1], [2, 3]]
    assert PermGroup(3, []).orbits() == [[0], [1], [2]]
    g = PermGroup(5, [P("(0 1 2)", 5), P("(0 1)", 5)])
    assert g.orbits() == [[0, 1, 2], [3], [4]]


def test_membership():
    g = PermGroup(3, [P("(0 1 2)", 3)])
    assert identity(3) in g
    assert P("(0 1)", 3) not in g
    assert P("(0 2 1)", 3) in g


def test_membership_of_random_products():
    rng = random.Random(13)
    gens = [P("(0 1 2 3 4)", 5), P("(0 1)", 5)]
    g = PermGroup(5, gens)
    for _ in range(50):
        w = identity(5)
        for _ in range(rng.randrange(1, 12)):
            w = compose(w, rng.choice(gens))
        assert w in g


def test_enumeration_matches_order():
    cases = [
        PermGroup(3, [P("(0 1 2)", 3), P("(0 1)", 3)]),   # Sym(3)
        PermGroup(4, [P("(0 1 2 3)", 4)]),                # Z4
        PermGroup(6, [P("(0 1 2)(3 4 5)", 6), P("(0 3)(1 4)(2 5)", 6)]),
        PermGroup(2, []),
    ]
    for g in cases:
        elems = list(g.elements())
        assert len(elems) == g.order()
        assert len(set(e.images for e in elems)) == g.order()
        for e in elems:
            assert e in g


def test_enumeration_deterministic():
    g = PermGroup(4, [P("(0 1 2 3)", 4), P("(0 1)", 4)])
    first = [e.images for e in g.elements()]
    second = [e.images for e in g.elements()]
    assert first == second
    assert first[0] == (0, 1, 2, 3)


def test_enumeration_cap():
    g = PermGroup(4, [P("(0 1 2 3)", 4), P("(0 1)", 4)])
    with pytest.raises(CapExceeded):
        list(g.elements(cap=23))
    assert len(list(g.elements(cap=24))) == 24


def test_generators_pass_membership():
    gens = [P("(0 1 2 3 4 5 6)", 7), P("(1 2 4)(3 6 5)", 7)]
    g = PermGroup(7, gens)
    for gen in gens:
        assert gen in g
