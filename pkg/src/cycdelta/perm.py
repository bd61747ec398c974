"""Permutations on points 1..n, stored as image tables."""
from __future__ import annotations

import math
import re
from typing import Iterable, Sequence


class PermutationError(ValueError):
    pass


class Permutation:
    """A permutation of {1, ..., n}.

    `images[i]` is the image of point i+1, so the identity on n points is
    (1, 2, ..., n).  Composition is right-to-left: (a * b)(p) = a(b(p)),
    i.e. b is applied first.
    """

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise PermutationError(f"not a permutation of 1..{n}: {images!r}")
        self.images = images

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __pow__(self, k: int) -> "Permutation":
        n = self.degree
        if k < 0:
            return self.inverse() ** (-k)
        result = identity(n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, img in enumerate(self.images):
            inv[img - 1] = i + 1
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(img == i + 1 for i, img in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = [False] * self.degree
        out = []
        for start in range(1, self.degree + 1):
            if seen[start - 1]:
                continue
            cyc = [start]
            seen[start - 1] = True
            p = self(start)
            while p != start:
                cyc.append(p)
                seen[p - 1] = True
                p = self(p)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        n = 1
        for cyc in self.cycles():
            n = math.lcm(n, len(cyc))
        return n

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({self.images})"

    def __str__(self) -> str:
        return format_cycles(self)


def identity(degree: int) -> Permutation:
    return Permutation(range(1, degree + 1))


def compose(a: Permutation, b: Permutation) -> Permutation:
    """(a ∘ b)(p) = a(b(p)); b acts first."""
    if a.degree != b.degree:
        raise PermutationError(f"degree mismatch: {a.degree} vs {b.degree}")
    ai = a.images
    return Permutation(tuple(ai[img - 1] for img in b.images))


def element_order(p: Permutation) -> int:
    """Order of p: the lcm of its cycle lengths."""
    return p.order()


def from_cycles(cycles: Iterable[Sequence[int]], degree: int) -> Permutation:
    """Build a permutation from cycles; overlapping cycles multiply (rightmost first)."""
    result = identity(degree)
    for cyc in cycles:
        images = list(range(1, degree + 1))
        for i, point in enumerate(cyc):
            if not 1 <= point <= degree:
                raise PermutationError(f"point {point} out of range 1..{degree}")
            images[point - 1] = cyc[(i + 1) % len(cyc)]
        result = result * Permutation(images)
    return result


_CYCLE_RE = re.compile(r"\((\d+(?:,\d+)*)\)")


def parse_cycles(text: str, degree: int | None = None) -> Permutation:
    """Parse juxtaposed cycle notation, e.g. "(1,2,3)(4,5)".

    Points are 1-based; a one-point cycle like "(1)" is a fixed point and may
    stand alone to denote an identity generator.  If degree is omitted, the
    largest point mentioned is used.
    """
    pos = 0
    cycles: list[tuple[int, ...]] = []
    while pos < len(text):
        m = _CYCLE_RE.match(text, pos)
        if m is None:
            raise PermutationError(f"bad cycle notation at offset {pos}: {text[pos:]!r}")
        points = tuple(int(t) for t in m.group(1).split(","))
        if len(set(points)) != len(points):
            dup = next(p for p in points if points.count(p) > 1)
            raise PermutationError(f"duplicate point {dup} in a cycle")
        if any(p < 1 for p in points):
            raise PermutationError("points are 1-based")
        cycles.append(points)
        pos = m.end()
    if not cycles:
        raise PermutationError(f"no cycles in {text!r}")
    maxpoint = max(max(c) for c in cycles)
    if degree is None:
        degree = maxpoint
    elif maxpoint > degree:
        raise PermutationError(f"point {maxpoint} exceeds degree {degree}")
    return from_cycles(cycles, degree)


def format_cycles(p: Permutation) -> str:
    """Disjoint cycle notation; the identity renders as "(1)"."""
    cycles = p.cycles()
    if not cycles:
        return "(1)"
    return "".join("(" + ",".join(str(pt) for pt in cyc) + ")" for cyc in cycles)
