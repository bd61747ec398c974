"""Deficiency census over a catalog, theorem checks, report emission."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from .catalog import Catalog, CatalogEntry
from .constructors import build_d8_c2k
from .group import (
    DeltaReport,
    delta_report,
    is_elementary_abelian_2,
    star_identity,
)
from .isomorphism import is_isomorphic

_ONES = (
    "zero one two three four five six seven eight nine ten eleven twelve "
    "thirteen fourteen fifteen sixteen seventeen eighteen nineteen"
).split()
_TENS = "twenty thirty forty fifty sixty seventy eighty ninety".split()


def number_word(n: int) -> str:
    """English name of 0..99, hyphenated ("twenty-one")."""
    if not 0 <= n < 100:
        raise ValueError(f"no word for {n}")
    if n < 20:
        return _ONES[n]
    tens, ones = divmod(n, 10)
    word = _TENS[tens - 2]
    return f"{word}-{_ONES[ones]}" if ones else word


Row = tuple[CatalogEntry, DeltaReport]


@dataclass
class CensusResult:
    delta_max: int
    per_delta: dict[int, list[Row]] = field(default_factory=dict)
    completeness: dict[int, bool] = field(default_factory=dict)
    delta_zero: list[Row] = field(default_factory=list)


def run_census(catalog: Catalog, delta_max: int) -> CensusResult:
    """Bucket catalog entries of order <= 8*delta_max by their deficiency.

    A bucket is complete when the catalog covers every order up to its
    8*delta bound, so nothing with that deficiency can live outside it.
    """
    if delta_max < 1:
        raise ValueError("delta_max must be >= 1")
    result = CensusResult(delta_max=delta_max)
    result.per_delta = {d: [] for d in range(1, delta_max + 1)}
    for d in range(1, delta_max + 1):
        needed = set(range(1, 8 * d + 1))
        result.completeness[d] = needed <= catalog.complete_orders
    entries = sorted(catalog.entries, key=lambda e: (e.order, e.index))
    for entry in entries:
        if entry.order > 8 * delta_max:
            continue
        report = delta_report(entry.group())
        if report.delta == 0:
            result.delta_zero.append((entry, report))
        elif report.delta <= delta_max:
            result.per_delta[report.delta].append((entry, report))
    return result


def _equality_family_member(entry: CatalogEntry, report: DeltaReport) -> bool:
    d = report.delta
    if d & (d - 1):
        return False  # equality requires delta a power of two
    k = d.bit_length() - 1
    return is_isomorphic(entry.group(), build_d8_c2k(k))


def verify_bound(result: CensusResult) -> list[str]:
    """Check |G| <= 8*delta and the classification of the equality cases."""
    violations = []
    for d in sorted(result.per_delta):
        for entry, report in result.per_delta[d]:
            if not report.bound_ok:
                violations.append(
                    f"{entry.name} {list(entry.gid)}: order {report.group_order} "
                    f"exceeds 8*delta = {8 * report.delta}"
                )
            elif report.equality_case and not _equality_family_member(entry, report):
                violations.append(
                    f"{entry.name} {list(entry.gid)}: attains order = 8*delta but "
                    f"is not D8 x C2^k"
                )
    return violations


def verify_miller(catalog: Catalog) -> list[str]:
    """Check i2 <= (3/4)|G| away from C2^k, equality only for D8 x C2^k."""
    violations = []
    for entry in sorted(catalog.entries, key=lambda e: (e.order, e.index)):
        g = entry.group()
        if is_elementary_abelian_2(g):
            continue
        report = delta_report(g)
        if 4 * report.i2 > 3 * report.group_order:
            violations.append(
                f"{entry.name} {list(entry.gid)}: i2 = {report.i2} exceeds "
                f"(3/4)*{report.group_order}"
            )
        elif 4 * report.i2 == 3 * report.group_order:
            if not _equality_family_member(entry, report):
                violations.append(
                    f"{entry.name} {list(entry.gid)}: attains i2 = (3/4)|G| but "
                    f"is not D8 x C2^k"
                )
    return violations


def verify_star(catalog: Catalog) -> list[str]:
    """Check the counting identities and the delta=0 characterization."""
    violations = []
    for entry in sorted(catalog.entries, key=lambda e: (e.order, e.index)):
        g = entry.group()
        lhs_order, order, lhs_delta, d = star_identity(g)
        if lhs_order != order:
            violations.append(
                f"{entry.name} {list(entry.gid)}: sum n_d*phi(d) = {lhs_order} "
                f"!= |G| = {order}"
            )
        if lhs_delta != d:
            violations.append(
                f"{entry.name} {list(entry.gid)}: sum n_d*(phi(d)-1) = {lhs_delta} "
                f"!= delta = {d}"
            )
        if (d == 0) != is_elementary_abelian_2(g):
            violations.append(
                f"{entry.name} {list(entry.gid)}: delta = {d} disagrees with "
                f"elementary abelian 2-group test"
            )
    return violations


def _heading(count: int, delta: int, complete: bool) -> str:
    word = number_word(count).capitalize()
    noun = "group" if count == 1 else "groups"
    suffix = "" if complete else " (partial)"
    return f"{word} {noun} with difference {delta}{suffix}"


def _group_line(entry: CatalogEntry) -> str:
    return f"{entry.name} = [ {entry.order}, {entry.index} ]"


def structured_dict(result: CensusResult) -> dict:
    def rows(pairs: list[Row]) -> list[dict]:
        return [
            {
                "name": entry.name,
                "order": entry.order,
                "index": entry.index,
                "report": asdict(report),
            }
            for entry, report in pairs
        ]

    return {
        "delta_max": result.delta_max,
        "buckets": [
            {
                "delta": d,
                "complete": result.completeness[d],
                "count": len(result.per_delta[d]),
                "groups": rows(result.per_delta[d]),
            }
            for d in range(1, result.delta_max + 1)
        ],
        "delta_zero": rows(result.delta_zero),
    }


def emit_report(result: CensusResult, format: str = "text") -> str:
    if format == "structured":
        return json.dumps(structured_dict(result), indent=2) + "\n"
    if format != "text":
        raise ValueError(f"unknown report format {format!r}")
    sections = []
    for d in range(1, result.delta_max + 1):
        rows = result.per_delta[d]
        lines = [_heading(len(rows), d, result.completeness[d])]
        lines.extend(_group_line(entry) for entry, _ in rows)
        sections.append("\n".join(lines))
    if result.delta_zero:
        count = len(result.delta_zero)
        word = number_word(count).capitalize()
        noun = "group" if count == 1 else "groups"
        lines = [f"{word} {noun} with difference 0 (elementary abelian 2-groups)"]
        lines.extend(_group_line(entry) for entry, _ in result.delta_zero)
        sections.append("\n".join(lines))
    return "\n\n".join(sections) + "\n"
