"""Graph automorphisms, transitivity tests, and the arc-type classifier.

The automorphism search interleaves equitable color refinement with
backtracking over images of a BFS-ordered vertex sequence.  It returns a
generating set found level by level: the subtree fixing the next base vertex
is explored first, then one coset representative per remaining orbit of the
base vertex's cell (orbit pruning against the generators found so far).
Every choice point is iterated in ascending vertex order, so the output is
deterministic.
"""
from __future__ import annotations

import sys
from dataclasses import dataclass

from circulant_lab import _kernels as kern
from circulant_lab import graphio
from circulant_lab.errors import (
    GroupNotAutomorphisms,
    NotArcTransitive,
    NotCubic,
    SearchTimeout,
    StabiliserNotOfForm,
)
from circulant_lab.perm import PermGroup, Permutation

DEFAULT_NODE_CAP = 10 ** 8

_STABILISER_TO_T = {3: 0, 6: 1, 12: 2, 24: 3, 48: 4}


class _Budget:
    __slots__ = ("left",)

    def __init__(self, cap: int):
        self.left = cap

    def spend(self):
        self.left -= 1
        if self.left < 0:
            raise SearchTimeout("automorphism search exceeded its node cap")


def bfs_order(graph: graphio.Graph) -> list[int]:
    """Vertices in BFS order from 0 (components visited by ascending root)."""
    n = graph.n
    seen = [False] * n
    order = []
    for root in range(n):
        if seen[root]:
            continue
        seen[root] = True
        queue = [root]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for u in graph.adjacency[v]:
                if not seen[u]:
                    seen[u] = True
                    queue.append(u)
    return order


def _individualize(colors: list[int], v: int) -> list[int]:
    pairs = [(c, 1 if i == v else 0) for i, c in enumerate(colors)]
    rank = {s: r for r, s in enumerate(sorted(set(pairs)))}
    return [rank[s] for s in pairs]


def _orbit_of(point: int, perms: list[Permutation]) -> set[int]:
    orbit = {point}
    queue = [point]
    while queue:
        p = queue.pop(0)
        for g in perms:
            q = g[p]
            if q not in orbit:
                orbit.add(q)
                queue.append(q)
    return orbit


def automorphism_group(graph: graphio.Graph, node_cap: int = DEFAULT_NODE_CAP) -> PermGroup:
    """Generators of the full automorphism group of the graph.

    Every returned generator is verified to preserve adjacency.  Raises
    SearchTimeout when more than node_cap refinement nodes are explored.
    """
    n = graph.n
    if n == 0:
        return PermGroup(0, [])
    ptr, flat = kern.build_csr(graph.adjacency)
    budget = _Budget(node_cap)
    base_seq = bfs_order(graph)
    gens: list[tuple[int, Permutation]] = []

    limit = max(sys.getrecursionlimit(), 6 * n + 200)
    sys.setrecursionlimit(limit)

    def refine(colors: list[int]) -> list[int]:
        budget.spend()
        return kern.refine_colors(ptr, flat, colors)

    def counts_of(colors: list[int]) -> list[int]:
        counts = [0] * (max(colors) + 1)
        for c in colors:
            counts[c] += 1
        return counts

    def select_target(colors: list[int], counts: list[int]) -> int | None:
        for v in base_seq:
            if counts[colors[v]] > 1:
                return v
        return None

    def leaf_mapping(alpha: list[int], beta: list[int]) -> list[int]:
        pos = [0] * n
        for w, c in enumerate(beta):
            pos[c] = w
        return [pos[c] for c in alpha]

    def seek(alpha: list[int], beta: list[int]) -> Permutation | None:
        """One automorphism consistent with the colored pair, or None."""
        counts = counts_of(alpha)
        if counts != counts_of(beta):
            return None
        t = select_target(alpha, counts)
        if t is None:
            images = leaf_mapping(alpha, beta)
            if kern.preserves_adjacency(ptr, flat, images):
                return Permutation(tuple(images))
            return None
        alpha_t = refine(_individualize(alpha, t))
        color_t = alpha[t]
        for w in range(n):
            if beta[w] != color_t:
                continue
            found = seek(alpha_t, refine(_individualize(beta, w)))
            if found is not None:
                return found
        return None

    def explore(alpha: list[int], level: int) -> None:
        """Walk the principal path (alpha equals beta), harvesting generators."""
        counts = counts_of(alpha)
        t = select_target(alpha, counts)
        if t is None:
            return
        alpha_t = refine(_individualize(alpha, t))
        explore(alpha_t, level + 1)
        color_t = alpha[t]
        orbit: set[int] | None = None
        for w in range(n):
            if w == t or alpha[w] != color_t:
                continue
            if orbit is None:
                known = [g for lvl, g in gens if lvl >= level]
                orbit = _orbit_of(t, known)
            if w in orbit:
                continue
            found = seek(alpha_t, refine(_individualize(alpha, w)))
            if found is not None:
                gens.append((level, found))
                orbit = None
        return

    explore(refine([0] * n), 0)
    return PermGroup(n, [g for _, g in gens])


def check_all_automorphisms(graph: graphio.Graph, group: PermGroup) -> None:
    """Raise GroupNotAutomorphisms unless every generator preserves adjacency."""
    ptr, flat = kern.build_csr(graph.adjacency)
    for g in group.generators:
        if g.degree != graph.n or not kern.preserves_adjacency(ptr, flat, list(g.images)):
            raise GroupNotAutomorphisms(f"generator {g} does not preserve adjacency")


def is_arc_transitive(graph: graphio.Graph, group: PermGroup) -> bool:
    """True iff the group is transitive on ordered pairs of adjacent vertices.

    Computed as the orbit of one fixed arc; vacuously true for edgeless
    graphs.  Raises GroupNotAutomorphisms if a generator breaks an edge.
    """
    check_all_automorphisms(graph, group)
    total_arcs = 2 * graph.edge_count
    if total_arcs == 0:
        return True
    start = next(graph.arcs())
    orbit = {start}
    queue = [start]
    while queue:
        u, v = queue.pop(0)
        for g in group.generators:
            arc = (g[u], g[v])
            if arc not in orbit:
                orbit.add(arc)
                queue.append(arc)
    return len(orbit) == total_arcs


def tutte_type(graph: graphio.Graph, group: PermGroup | None = None,
               node_cap: int = DEFAULT_NODE_CAP) -> int:
    """Arc-type t in [0, 4]: the vertex-stabiliser has order 3 * 2^t.

    Requires a cubic, connected, arc-transitive graph.  A stabiliser order
    outside {3, 6, 12, 24, 48} is impossible for genuine inputs and raises
    StabiliserNotOfForm.
    """
    if not graphio.is_cubic(graph):
        raise NotCubic("a vertex has degree != 3")
    if not graphio.is_connected(graph):
        raise NotArcTransitive("graph is not connected")
    if group is None:
        group = automorphism_group(graph, node_cap)
    if not is_arc_transitive(graph, group):
        raise NotArcTransitive("automorphism group is not transitive on arcs")
    order = group.order()
    if order % graph.n != 0:
        raise StabiliserNotOfForm(f"|Aut| = {order} not divisible by n = {graph.n}")
    stab = order // graph.n
    t = _STABILISER_TO_T.get(stab)
    if t is None:
        raise StabiliserNotOfForm(f"stabiliser order {stab} is not 3 * 2^t, t <= 4")
    return t


@dataclass(frozen=True)
class SymmetryProfile:
    n: int
    aut_order: int
    vertex_transitive: bool
    arc_transitive: bool
    tutte_t: int | None
    stabiliser_order: int | None

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "aut_order": self.aut_order,
            "vertex_transitive": self.vertex_transitive,
            "arc_transitive": self.arc_transitive,
            "tutte_t": self.tutte_t,
            "stabiliser_order": self.stabiliser_order,
        }


def symmetry_profile(graph: graphio.Graph, group: PermGroup | None = None,
                     node_cap: int = DEFAULT_NODE_CAP) -> SymmetryProfile:
    """Full symmetry analysis; computes Aut if no group is supplied."""
    if group is None:
        group = automorphism_group(graph, node_cap)
    order = group.order()
    vt = graph.n > 0 and len(group.orbits()) == 1
    at = is_arc_transitive(graph, group)
    stab = order // graph.n if vt else None
    t = None
    if at and graphio.is_cubic(graph) and graphio.is_connected(graph) and graph.n > 0:
        t = tutte_type(graph, group)
    return SymmetryProfile(graph.n, order, vt, at, t, stab)
