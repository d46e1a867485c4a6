"""k-circulant spectrum, witnesses, and the 6k^2 order-bound checks.

A graph is a k-circulant when some semiregular automorphism has exactly k
cycles; the spectrum collects every such k.  It is computed by exhaustive
enumeration of Aut via the stabilizer chain, which the Tutte bound
(|Aut| <= 48 n for the cubic arc-transitive corpus) keeps tractable at desk
scale.  The trivial k = n (identity witness) is always part of the spectrum;
reports may filter it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from circulant_lab import _kernels as kern
from circulant_lab import aut as aut_mod
from circulant_lab import graphio
from circulant_lab.errors import KDoesNotDivideN, PreconditionViolated
from circulant_lab.perm import (
    PermGroup,
    Permutation,
    cycle_structure,
    is_semiregular,
    power,
    to_cycle_string,
)


@dataclass(frozen=True)
class BoundFinding:
    """Outcome of the order-at-most-6k^2 check for one odd spectrum value."""

    k: int
    bound: int
    passed: bool
    theorem_backed: bool

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "bound": self.bound,
            "pass": self.passed,
            "theorem_backed": self.theorem_backed,
        }


@dataclass
class SpectrumReport:
    n: int
    spectrum: tuple[int, ...]
    witnesses: dict[int, Permutation]
    findings: tuple[BoundFinding, ...] = field(default_factory=tuple)

    def to_json_dict(self, include_trivial: bool = True) -> dict:
        ks = [k for k in self.spectrum if include_trivial or k != self.n]
        return {
            "n": self.n,
            "spectrum": ks,
            "witnesses": {str(k): to_cycle_string(self.witnesses[k]) for k in ks},
            "findings": [f.to_json_dict() for f in self.findings],
        }


def is_squarefree(k: int) -> bool:
    d = 2
    while d * d <= k:
        if k % (d * d) == 0:
            return False
        d += 1
    return True


def k_spectrum(graph: graphio.Graph, group: PermGroup | None = None,
               cap: int | None = None,
               node_cap: int = aut_mod.DEFAULT_NODE_CAP) -> SpectrumReport:
    """Spectrum { n/|g| : g in Aut, g semiregular } with one witness per k.

    Witnesses are the first hits in the deterministic element enumeration.
    Raises CapExceeded when |Aut| exceeds the enumeration cap.
    """
    if group is None:
        group = aut_mod.automorphism_group(graph, node_cap)
    n = graph.n
    witnesses: dict[int, Permutation] = {}
    for g in group.elements(cap):
        if not kern.is_semiregular_images(g.images):
            continue
        lengths = kern.cycle_lengths(g.images)
        order = lengths[0] if lengths else 1
        k = n // order if order else n
        if k not in witnesses:
            witnesses[k] = g
    spectrum = tuple(sorted(witnesses))
    return SpectrumReport(n, spectrum, witnesses)


def check_order_bound(report: SpectrumReport) -> tuple[BoundFinding, ...]:
    """Order-bound findings for every odd k in the spectrum.

    pass means n <= 6 k^2; theorem_backed marks the k (squarefree, coprime
    to 6) for which the bound is a theorem rather than a conjecture.
    """
    out = []
    for k in report.spectrum:
        if k % 2 == 0:
            continue
        bound = 6 * k * k
        out.append(BoundFinding(
            k=k,
            bound=bound,
            passed=report.n <= bound,
            theorem_backed=is_squarefree(k) and math.gcd(k, 6) == 1,
        ))
    return tuple(out)


def certify_k_circulant(graph: graphio.Graph, k: int,
                        group: PermGroup | None = None,
                        cap: int | None = None,
                        node_cap: int = aut_mod.DEFAULT_NODE_CAP) -> Permutation | None:
    """A verified semiregular witness with k cycles, or None.

    The witness is re-verified from scratch: cycle structure and adjacency
    preservation are both checked before returning.
    """
    n = graph.n
    if k < 1 or n % k != 0:
        raise KDoesNotDivideN(f"k = {k} does not divide n = {n}")
    if group is None:
        group = aut_mod.automorphism_group(graph, node_cap)
    want = n // k
    ptr, flat = kern.build_csr(graph.adjacency)
    for g in group.elements(cap):
        if not kern.is_semiregular_images(g.images):
            continue
        lengths = kern.cycle_lengths(g.images)
        order = lengths[0] if lengths else 1
        if order != want:
            continue
        structure = cycle_structure(g)
        if structure.element_order != want or not all(l == want for l in structure.cycle_lengths):
            continue
        if not kern.preserves_adjacency(ptr, flat, list(g.images)):
            continue
        return g
    return None


def edge_reversing_involution_check(graph: graphio.Graph, c_generator: Permutation) -> bool:
    """Does the unique involution of <c> swap the endpoints of some edge?

    Preconditions (PreconditionViolated otherwise): every vertex degree odd;
    c_generator an automorphism, semiregular, with an odd number of cycles.
    Under these the group <c> has even order and the check must return True;
    the operation exists to property-test exactly that.
    """
    if any(len(nbrs) % 2 == 0 for nbrs in graph.adjacency):
        raise PreconditionViolated("a vertex has even degree")
    if c_generator.degree != graph.n:
        raise PreconditionViolated("generator degree differs from graph order")
    ptr, flat = kern.build_csr(graph.adjacency)
    if not kern.preserves_adjacency(ptr, flat, list(c_generator.images)):
        raise PreconditionViolated("generator is not an automorphism")
    if not is_semiregular(c_generator):
        raise PreconditionViolated("generator is not semiregular")
    order = cycle_structure(c_generator).element_order
    orbits = graph.n // order
    if orbits % 2 == 0:
        raise PreconditionViolated(f"even number of orbits ({orbits})")
    if order % 2 != 0:
        # impossible alongside the checks above (it would force odd n on a
        # graph whose degree sum is odd); kept as a guard
        raise PreconditionViolated(f"<c> has odd order {order}")
    involution = power(c_generator, order // 2)
    return any(involution[u] == v for u, v in graph.edges())
