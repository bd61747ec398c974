"""Isomorphism testing for small permutation groups.

A cheap invariant fingerprint filters most pairs; survivors go through a
backtracking search that maps a minimal generating sequence of one group
onto candidate images in the other, extending along the Cayley graph and
rejecting on the first inconsistency.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .group import Group, closure
from .perm import Permutation, compose, identity


@dataclass(frozen=True, order=True)
class Fingerprint:
    """Invariants: order, element-order spectrum, and coarse structure."""

    order: int
    spectrum: tuple[tuple[int, int], ...]
    abelian: bool
    center_order: int
    derived_order: int
    exponent: int


def fingerprint(group: Group) -> Fingerprint:
    cached = getattr(group, "_fingerprint", None)
    if cached is not None:
        return cached
    counts: dict[int, int] = {}
    for d in group.element_orders():
        counts[d] = counts.get(d, 0) + 1
    fp = Fingerprint(
        order=group.order,
        spectrum=tuple(sorted(counts.items())),
        abelian=group.is_abelian(),
        center_order=group.center_order(),
        derived_order=group.derived_subgroup_order(),
        exponent=group.exponent(),
    )
    group._fingerprint = fp
    return fp


def extend_generator_map(
    source: Group,
    target: Group,
    pairs: Sequence[tuple[Permutation, Permutation]],
) -> dict[tuple, tuple] | None:
    """Extend generator-image pairs to a homomorphism, or return None.

    The result maps images-tuples of the subgroup the pair sources generate
    to images-tuples in the target.  Every Cayley edge is checked, so a
    non-None result is a genuine injective homomorphism on that subgroup.
    """
    src_ident = identity(source.degree).images
    tgt_ident = identity(target.degree).images
    mapping: dict[tuple, tuple] = {src_ident: tgt_ident}
    frontier: list[Permutation] = [identity(source.degree)]
    gens = [(g, h) for g, h in pairs]
    while frontier:
        new: list[Permutation] = []
        for x in frontier:
            y = Permutation(mapping[x.images])
            for g, h in gens:
                xg = compose(x, g)
                yh = compose(y, h)
                seen = mapping.get(xg.images)
                if seen is None:
                    mapping[xg.images] = yh.images
                    new.append(xg)
                elif seen != yh.images:
                    return None
        frontier = new
    if len(set(mapping.values())) != len(mapping):
        return None
    return mapping


def _minimal_generating_sequence(group: Group) -> list[Permutation]:
    """Greedy short generating sequence, highest element orders first."""
    if group.order == 1:
        return []
    ranked = sorted(
        group.elements, key=lambda p: (-p.order(), p.images)
    )
    gens: list[Permutation] = []
    span = {identity(group.degree).images}
    for p in ranked:
        if len(span) == group.order:
            break
        if p.images in span:
            continue
        gens.append(p)
        span = {q.images for q in closure(gens, cap=group.order)}
    return gens


def is_isomorphic(a: Group, b: Group) -> bool:
    if a.order != b.order:
        return False
    if fingerprint(a) != fingerprint(b):
        return False
    if a.order == 1:
        return True

    gens = _minimal_generating_sequence(a)
    by_order: dict[int, list[Permutation]] = {}
    for p in b.elements:
        by_order.setdefault(p.order(), []).append(p)

    def assign(k: int, pairs: list[tuple[Permutation, Permutation]]) -> bool:
        if k == len(gens):
            final = extend_generator_map(a, b, pairs)
            return final is not None and len(final) == a.order
        g = gens[k]
        for h in by_order.get(g.order(), ()):
            trial = pairs + [(g, h)]
            if extend_generator_map(a, b, trial) is None:
                continue
            if assign(k + 1, trial):
                return True
        return False

    return assign(0, [])


def dedupe(groups: Iterable[Group]) -> list[Group]:
    """First representative of each isomorphism class, in input order."""
    buckets: dict[Fingerprint, list[Group]] = {}
    out: list[Group] = []
    for g in groups:
        fp = fingerprint(g)
        bucket = buckets.setdefault(fp, [])
        if any(is_isomorphic(g, seen) for seen in bucket):
            continue
        bucket.append(g)
        out.append(g)
    return out
