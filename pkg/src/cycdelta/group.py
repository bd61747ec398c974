"""Finite permutation groups and their cyclic subgroup counts.

The central quantity is the deficiency delta(G) = |G| - |C(G)|, where C(G)
is the set of cyclic subgroups of G.  Counting is exact integer arithmetic
throughout: each divisor d of |G| contributes n_d = (#elements of order d)
/ phi(d) cyclic subgroups, and the two identities

    sum_d n_d * phi(d)       == |G|
    sum_d n_d * (phi(d) - 1) == |G| - |C(G)|

are both evaluated and cross-checked.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .perm import Permutation, compose, identity

DEFAULT_CLOSURE_CAP = 10_000
CLOSURE_CAP_ENV = "CYCDELTA_CLOSURE_CAP"


class ClosureError(RuntimeError):
    """Closure exceeded the element cap (runaway generator set)."""


class GroupError(ValueError):
    pass


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    """Euler's totient."""
    if n < 1:
        raise ValueError(f"phi undefined for {n}")
    result = n
    d = 2
    m = n
    while d * d <= m:
        if m % d == 0:
            while m % d == 0:
                m //= d
            result -= result // d
        d += 1
    if m > 1:
        result -= result // m
    return result


def closure_cap() -> int:
    raw = os.environ.get(CLOSURE_CAP_ENV)
    if raw is None:
        return DEFAULT_CLOSURE_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise GroupError(f"{CLOSURE_CAP_ENV} must be an integer, got {raw!r}")
    if cap < 1:
        raise GroupError(f"{CLOSURE_CAP_ENV} must be positive, got {cap}")
    return cap


def closure(generators: Sequence[Permutation], cap: int | None = None) -> tuple[Permutation, ...]:
    """All products of the generators, in deterministic order.

    Breadth-first over generator words; ties within a BFS level are broken by
    image-table lexicographic order.  Raises ClosureError past the cap
    (default 10000, overridable via CYCDELTA_CLOSURE_CAP).
    """
    if not generators:
        raise GroupError("at least one generator required")
    if cap is None:
        cap = closure_cap()
    degree = generators[0].degree
    for g in generators:
        if g.degree != degree:
            raise GroupError(f"generator degree mismatch: {g.degree} vs {degree}")
    ident = identity(degree)
    elements = [ident]
    seen = {ident.images}
    frontier = [ident]
    while frontier:
        new = []
        for x in frontier:
            for g in generators:
                y = compose(x, g)
                if y.images not in seen:
                    seen.add(y.images)
                    new.append(y)
                    if len(seen) > cap:
                        raise ClosureError(f"closure exceeded cap of {cap} elements")
        new.sort(key=lambda p: p.images)
        elements.extend(new)
        frontier = new
    return tuple(elements)


@dataclass(frozen=True)
class OrderCensus:
    """Element counts by order, for a group of the given size."""

    group_order: int
    counts: dict[int, int]

    def divisor_check(self) -> bool:
        return all(d >= 1 and self.group_order % d == 0 for d in self.counts)


@dataclass(frozen=True)
class DeltaReport:
    """Deficiency summary for one group."""

    group_order: int
    cyclic_count: int
    delta: int
    i2: int
    bound_ok: bool
    equality_case: bool


class Group:
    """A finite permutation group given by its full element set.

    Elements are stored in the deterministic order produced by closure().
    `name` and `gid` (an (order, index) catalog id) are optional metadata.
    """

    def __init__(
        self,
        elements: Sequence[Permutation],
        generators: Sequence[Permutation],
        name: str | None = None,
        gid: tuple[int, int] | None = None,
    ):
        if not elements:
            raise GroupError("empty element set")
        self.elements = tuple(elements)
        self.generators = tuple(generators)
        self.name = name
        self.gid = gid
        self.degree = self.elements[0].degree
        self._index = {p.images: i for i, p in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise GroupError("duplicate elements")
        self._orders: tuple[int, ...] | None = None

    @classmethod
    def generate(
        cls,
        generators: Sequence[Permutation],
        name: str | None = None,
        gid: tuple[int, int] | None = None,
        cap: int | None = None,
    ) -> "Group":
        return cls(closure(generators, cap=cap), generators, name=name, gid=gid)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return p.images in self._index

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def identity_element(self) -> Permutation:
        return identity(self.degree)

    def element_orders(self) -> tuple[int, ...]:
        if self._orders is None:
            self._orders = tuple(p.order() for p in self.elements)
        return self._orders

    def is_abelian(self) -> bool:
        gens = self.generators or self.elements
        for i, a in enumerate(gens):
            for b in gens[i + 1:]:
                if compose(a, b) != compose(b, a):
                    return False
        return True

    def center_order(self) -> int:
        gens = self.generators or self.elements
        n = 0
        for x in self.elements:
            if all(compose(x, g) == compose(g, x) for g in gens):
                n += 1
        return n

    def derived_subgroup_order(self) -> int:
        comms = set()
        elems = self.elements
        for a in elems:
            a_inv = a.inverse()
            for b in elems:
                c = compose(compose(a_inv, b.inverse()), compose(a, b))
                comms.add(c.images)
        if len(comms) == 1:
            return 1
        gens = [Permutation(im) for im in sorted(comms)]
        return len(closure(gens, cap=self.order))

    def exponent(self) -> int:
        e = 1
        for d in self.element_orders():
            e = math.lcm(e, d)
        return e

    def __repr__(self) -> str:
        label = self.name or f"order {self.order}"
        return f"Group({label}, degree {self.degree})"


def order_census(group: Group) -> OrderCensus:
    counts: dict[int, int] = {}
    for d in group.element_orders():
        counts[d] = counts.get(d, 0) + 1
    census = OrderCensus(group_order=group.order, counts=counts)
    for d in counts:
        if group.order % d != 0:
            raise GroupError(f"element order {d} does not divide group order {group.order}")
    return census


def cyclic_subgroup_count(group: Group) -> int:
    """Number of cyclic subgroups: sum over d of n_d = counts[d] / phi(d).

    Elements of order d split into classes of phi(d) generators per cyclic
    subgroup, so each division must be exact; a remainder means the element
    set was not actually a group.
    """
    census = order_census(group)
    total = 0
    for d, count in sorted(census.counts.items()):
        phi = euler_phi(d)
        if count % phi != 0:
            raise GroupError(
                f"inconsistent census: {count} elements of order {d}, phi({d}) = {phi}"
            )
        total += count // phi
    return total


def i2(group: Group) -> int:
    """Number of elements of order 2 or less (identity plus involutions)."""
    return sum(1 for d in group.element_orders() if d <= 2)


def delta(group: Group) -> int:
    """Deficiency |G| - |C(G)|, cross-checked against the generator-count identity."""
    census = order_census(group)
    cyclic = 0
    alt = 0
    for d, count in sorted(census.counts.items()):
        phi = euler_phi(d)
        if count % phi != 0:
            raise GroupError(
                f"inconsistent census: {count} elements of order {d}, phi({d}) = {phi}"
            )
        n_d = count // phi
        cyclic += n_d
        alt += n_d * (phi - 1)
    result = group.order - cyclic
    if result != alt:
        raise GroupError(f"deficiency identities disagree: {result} vs {alt}")
    return result


def star_identity(group: Group) -> tuple[int, int, int, int]:
    """Both counting identities, evaluated independently.

    Returns (sum n_d*phi(d), |G|, sum n_d*(phi(d)-1), |G| - |C(G)|); the first
    pair must match and so must the second.
    """
    census = order_census(group)
    lhs1 = 0
    lhs2 = 0
    cyclic = 0
    for d, count in sorted(census.counts.items()):
        phi = euler_phi(d)
        n_d = count // phi
        if n_d * phi != count:
            raise GroupError(
                f"inconsistent census: {count} elements of order {d}, phi({d}) = {phi}"
            )
        lhs1 += n_d * phi
        lhs2 += n_d * (phi - 1)
        cyclic += n_d
    return lhs1, group.order, lhs2, group.order - cyclic


def delta_report(group: Group) -> DeltaReport:
    d = delta(group)
    n = group.order
    if d > 0:
        bound_ok = n <= 8 * d
        equality = n == 8 * d
    else:
        bound_ok = True
        equality = False
    return DeltaReport(
        group_order=n,
        cyclic_count=n - d,
        delta=d,
        i2=i2(group),
        bound_ok=bound_ok,
        equality_case=equality,
    )


def is_elementary_abelian_2(group: Group) -> bool:
    """True for C2^k (including the trivial group)."""
    return all(d in (1, 2) for d in group.element_orders()) and group.is_abelian()
