"""Exact permutation arithmetic and permutation-group queries.

Permutations act on {0..n-1} and compose left-to-right:
``compose(p, q)`` applies p first, so ``compose(p, q)[i] == q[p[i]]``.
Groups answer order/membership/orbit/enumeration queries through a
deterministic stabilizer chain (base points are smallest moved points,
transversals are built by FIFO orbit searches), so repeated runs produce
identical element streams.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from circulant_lab import _kernels as kern
from circulant_lab.errors import CapExceeded, DegreeMismatch

DEFAULT_ENUMERATION_CAP = 2 ** 24


@dataclass(frozen=True)
class Permutation:
    """A bijection on {0..n-1}, stored as the tuple of images."""

    images: tuple[int, ...]

    @staticmethod
    def from_images(images: Iterable[int]) -> "Permutation":
        images = tuple(images)
        n = len(images)
        seen = [False] * n
        for x in images:
            if not isinstance(x, int) or not 0 <= x < n or seen[x]:
                raise ValueError(f"not a permutation of 0..{n - 1}: {images!r}")
            seen[x] = True
        return Permutation(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __getitem__(self, point: int) -> int:
        return self.images[point]

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def __repr__(self) -> str:
        return f"Permutation({to_cycle_string(self)!r}, degree={self.degree})"


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(n)))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply p, then q."""
    if p.degree != q.degree:
        raise DegreeMismatch(f"degrees {p.degree} and {q.degree}")
    return Permutation(tuple(kern.compose_images(p.images, q.images)))


def inverse(p: Permutation) -> Permutation:
    return Permutation(tuple(kern.inverse_images(p.images)))


def power(p: Permutation, e: int) -> Permutation:
    """p composed with itself e times (e may be negative)."""
    if e < 0:
        return power(inverse(p), -e)
    result = list(range(p.degree))
    square = list(p.images)
    while e:
        if e & 1:
            result = kern.compose_images(result, square)
        e >>= 1
        if e:
            square = kern.compose_images(square, square)
    return Permutation(tuple(result))


@dataclass(frozen=True)
class CycleStructure:
    cycle_lengths: tuple[int, ...]
    element_order: int


def cycle_structure(p: Permutation) -> CycleStructure:
    lengths = tuple(kern.cycle_lengths(p.images))
    return CycleStructure(lengths, math.lcm(*lengths) if lengths else 1)


def is_semiregular(p: Permutation) -> bool:
    """True iff every cycle of p has length equal to the element order."""
    return kern.is_semiregular_images(p.images)


def to_cycle_string(p: Permutation) -> str:
    """Cycle notation with fixed points omitted, e.g. ``(0 1 2)(3 4)``."""
    seen = [False] * p.degree
    parts = []
    for i in range(p.degree):
        if seen[i] or p.images[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = p.images[i]
        while j != i:
            seen[j] = True
            cyc.append(j)
            j = p.images[j]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) if parts else "()"


def from_cycle_string(text: str, degree: int) -> Permutation:
    """Parse cycle notation like ``(0 1 2)(3 4)`` into a permutation."""
    images = list(range(degree))
    body = text.replace(",", " ").strip()
    if body in ("", "()"):
        return Permutation(tuple(images))
    if not body.startswith("(") or not body.endswith(")"):
        raise ValueError(f"bad cycle string: {text!r}")
    for chunk in body[1:-1].split(")("):
        points = [int(tok) for tok in chunk.split()]
        if len(points) != len(set(points)):
            raise ValueError(f"repeated point in cycle: {chunk!r}")
        for a, b in zip(points, points[1:] + points[:1]):
            if not 0 <= a < degree:
                raise ValueError(f"point {a} outside degree {degree}")
            images[a] = b
    return Permutation.from_images(images)


class _Level:
    __slots__ = ("base", "transversal")

    def __init__(self, base: int):
        self.base = base
        self.transversal: dict[int, list[int]] = {}


class PermGroup:
    """Permutation group given by generators, queried via a stabilizer chain.

    Immutable after construction; the chain is built lazily on first query
    and all chain-building choices are deterministic.
    """

    def __init__(self, degree: int, generators: Sequence[Permutation]):
        for g in generators:
            if g.degree != degree:
                raise DegreeMismatch(f"generator degree {g.degree}, group degree {degree}")
        self.degree = degree
        self.generators = tuple(g for g in generators if not g.is_identity())
        self._levels: list[_Level] | None = None
        self._strong_gens: list[list[int]] | None = None

    # --- chain construction ---

    def _ensure_chain(self) -> list[_Level]:
        if self._levels is None:
            self._build_chain()
        return self._levels

    def _build_chain(self) -> None:
        self._levels = []
        self._strong_gens = []
        for g in self.generators:
            self._insert(list(g.images))
        i = len(self._levels) - 1
        while i >= 0:
            self._rebuild_transversal(i)
            stuck = self._verify_level(i)
            if stuck is None:
                i -= 1
            else:
                i = stuck

    def _gens_at(self, level: int) -> list[list[int]]:
        levels = self._levels
        return [
            g for g in self._strong_gens
            if all(g[levels[j].base] == levels[j].base for j in range(level))
        ]

    def _rebuild_transversal(self, level: int) -> None:
        lvl = self._levels[level]
        gens = self._gens_at(level)
        ident = list(range(self.degree))
        trans = {lvl.base: ident}
        queue = [lvl.base]
        while queue:
            pt = queue.pop(0)
            tp = trans[pt]
            for g in gens:
                q = g[pt]
                if q not in trans:
                    trans[q] = kern.compose_images(tp, g)
                    queue.append(q)
        lvl.transversal = trans

    def _sift_images(self, images: list[int], start: int) -> tuple[list[int], int]:
        levels = self._levels
        for i in range(start, len(levels)):
            lvl = levels[i]
            t = lvl.transversal.get(images[lvl.base])
            if t is None:
                return images, i
            images = kern.compose_images(images, kern.inverse_images(t))
        return images, len(levels)

    def _insert(self, images: list[int]) -> int | None:
        """Sift images; adjoin the residue as a strong generator if nontrivial."""
        residue, level = self._sift_images(images, 0)
        if all(i == x for i, x in enumerate(residue)):
            return None
        if level == len(self._levels):
            base = next(i for i, x in enumerate(residue) if i != x)
            self._levels.append(_Level(base))
        self._strong_gens.append(residue)
        for j in range(level + 1):
            self._rebuild_transversal(j)
        return level

    def _verify_level(self, level: int) -> int | None:
        """Sift all Schreier generators of this level; report where one sticks."""
        lvl = self._levels[level]
        gens = self._gens_at(level)
        for pt in sorted(lvl.transversal):
            tp = lvl.transversal[pt]
            for g in gens:
                t2 = lvl.transversal[g[pt]]
                schreier = kern.compose_images(
                    kern.compose_images(tp, g), kern.inverse_images(t2)
                )
                if all(i == x for i, x in enumerate(schreier)):
                    continue
                residue, stuck = self._sift_images(schreier, level + 1)
                if not all(i == x for i, x in enumerate(residue)):
                    if stuck == len(self._levels):
                        base = next(i for i, x in enumerate(residue) if i != x)
                        self._levels.append(_Level(base))
                    self._strong_gens.append(residue)
                    for j in range(stuck + 1):
                        self._rebuild_transversal(j)
                    return stuck
        return None

    # --- queries ---

    def order(self) -> int:
        n = 1
        for lvl in self._ensure_chain():
            n *= len(lvl.transversal)
        return n

    def base(self) -> tuple[int, ...]:
        return tuple(lvl.base for lvl in self._ensure_chain())

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise DegreeMismatch(f"degrees {p.degree} and {self.degree}")
        self._ensure_chain()
        residue, _ = self._sift_images(list(p.images), 0)
        return all(i == x for i, x in enumerate(residue))

    def __contains__(self, p: Permutation) -> bool:
        return self.contains(p)

    def orbits(self) -> list[list[int]]:
        """Orbit partition of {0..n-1} under the group, each orbit sorted."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            orbit = [start]
            seen[start] = True
            queue = [start]
            while queue:
                pt = queue.pop(0)
                for g in self.generators:
                    q = g[pt]
                    if not seen[q]:
                        seen[q] = True
                        orbit.append(q)
                        queue.append(q)
            out.append(sorted(orbit))
        return out

    def elements(self, cap: int | None = None) -> Iterator[Permutation]:
        """Every element exactly once, in a deterministic order.

        The order is lexicographic over chain transversal indices, with the
        top level most significant and each transversal iterated by ascending
        orbit point.  Raises CapExceeded before yielding anything if the
        group order exceeds the cap.
        """
        if cap is None:
            cap = DEFAULT_ENUMERATION_CAP
        order = self.order()
        if order > cap:
            raise CapExceeded(f"group order {order} exceeds cap {cap}")
        levels = self._ensure_chain()

        def rec(i: int) -> Iterator[list[int]]:
            if i == len(levels):
                yield list(range(self.degree))
                return
            trans = levels[i].transversal
            for pt in sorted(trans):
                t = trans[pt]
                for h in rec(i + 1):
                    yield kern.compose_images(h, t)

        for images in rec(0):
            yield Permutation(tuple(images))


def group_order(g: PermGroup) -> int:
    return g.order()


def membership(g: PermGroup, p: Permutation) -> bool:
    return g.contains(p)


def orbits(g: PermGroup) -> list[list[int]]:
    return g.orbits()


def enumerate_elements(g: PermGroup, cap: int | None = None) -> Iterator[Permutation]:
    return g.elements(cap)
