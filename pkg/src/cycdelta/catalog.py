"""Small-group catalog: line-oriented text format, validation, bundled data.

Format, one record per line:
    # comment                      (attaches to the next entry; leading
                                    comments before any entry form the header)
    !complete 1-16 24              (orders covered exhaustively, ints or a-b runs)
    8 3 D8 : (1,2,3,4) ; (1,3)     (order, index, name, generators)

The name/generator separator is a colon preceded by whitespace, so names
like C3:C4 may themselves contain colons.

Generators are juxtaposed cycles of 1-based points; fixed points are
omitted.  A lone "(1)" denotes the identity so the trivial group stays
representable.  A header comment "# indexing: gap" declares that (order,
index) pairs follow the GAP SmallGroups numbering.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources

from .group import ClosureError, Group, GroupError
from .perm import Permutation, PermutationError, format_cycles, parse_cycles


class CatalogError(ValueError):
    pass


_GAP_HEADER = re.compile(r"#\s*indexing:\s*gap\s*$")


@dataclass
class CatalogEntry:
    order: int
    index: int
    name: str
    generators: tuple[Permutation, ...]
    comments: tuple[str, ...] = ()

    def __post_init__(self):
        self._group: Group | None = None

    @property
    def gid(self) -> tuple[int, int]:
        return (self.order, self.index)

    def group(self) -> Group:
        """Close the generators, checking the declared order; result is cached."""
        if self._group is None:
            try:
                g = Group.generate(
                    self.generators, name=self.name, gid=self.gid, cap=self.order
                )
            except ClosureError:
                raise CatalogError(
                    f"entry {self.order} {self.index} {self.name}: closure exceeds "
                    f"declared order {self.order}"
                )
            if g.order != self.order:
                raise CatalogError(
                    f"entry {self.order} {self.index} {self.name}: closure has "
                    f"{g.order} elements, declared {self.order}"
                )
            self._group = g
        return self._group

    def __eq__(self, other):
        if not isinstance(other, CatalogEntry):
            return NotImplemented
        return (
            self.gid == other.gid
            and self.name == other.name
            and self.generators == other.generators
            and self.comments == other.comments
        )


@dataclass
class Catalog:
    entries: list[CatalogEntry] = field(default_factory=list)
    complete_orders: frozenset[int] = frozenset()
    header: tuple[str, ...] = ()
    trailer: tuple[str, ...] = ()

    @property
    def gap_indexed(self) -> bool:
        return any(_GAP_HEADER.match(line) for line in self.header)

    def entries_of_order(self, order: int) -> list[CatalogEntry]:
        return [e for e in self.entries if e.order == order]

    def restrict(self, max_order: int) -> "Catalog":
        """Sub-catalog of the entries with order <= max_order."""
        return Catalog(
            entries=[e for e in self.entries if e.order <= max_order],
            complete_orders=frozenset(o for o in self.complete_orders if o <= max_order),
            header=self.header,
            trailer=self.trailer,
        )


def _parse_order_list(text: str, lineno: int) -> set[int]:
    orders: set[int] = set()
    for token in text.split():
        m = re.fullmatch(r"(\d+)-(\d+)", token)
        if m:
            lo, hi = int(m.group(1)), int(m.group(2))
            if lo < 1 or hi < lo:
                raise CatalogError(f"line {lineno}: bad order range {token!r}")
            orders.update(range(lo, hi + 1))
            continue
        if not token.isdigit() or int(token) < 1:
            raise CatalogError(f"line {lineno}: bad order {token!r} in !complete")
        orders.add(int(token))
    if not orders:
        raise CatalogError(f"line {lineno}: !complete needs at least one order")
    return orders


def _parse_entry(line: str, lineno: int, comments: tuple[str, ...]) -> CatalogEntry:
    # the separator is a colon preceded by whitespace; names such as C3:C4
    # contain colons but never spaces
    cut = line.find(" :")
    if cut == -1:
        raise CatalogError(f"line {lineno}: entry is missing ' : '")
    head, gens_text = line[:cut], line[cut + 2:]
    fields = head.split()
    if len(fields) != 3:
        raise CatalogError(
            f"line {lineno}: expected 'order index name :', got {head.strip()!r}"
        )
    order_s, index_s, name = fields
    if not order_s.isdigit() or int(order_s) < 1:
        raise CatalogError(f"line {lineno}: bad order {order_s!r}")
    if not index_s.isdigit() or int(index_s) < 1:
        raise CatalogError(f"line {lineno}: bad index {index_s!r}")
    gen_texts = [t.replace(" ", "").replace("\t", "") for t in gens_text.split(";")]
    if any(not t for t in gen_texts):
        raise CatalogError(f"line {lineno}: empty generator")
    degree = 1
    for t in gen_texts:
        for point in re.findall(r"\d+", t):
            degree = max(degree, int(point))
    gens = []
    for t in gen_texts:
        try:
            gens.append(parse_cycles(t, degree=degree))
        except PermutationError as exc:
            raise CatalogError(f"line {lineno}: {exc}")
    return CatalogEntry(
        order=int(order_s),
        index=int(index_s),
        name=name,
        generators=tuple(gens),
        comments=comments,
    )


def parse_catalog(text: str) -> Catalog:
    entries: list[CatalogEntry] = []
    complete: set[int] = set()
    header: list[str] = []
    pending: list[str] = []
    seen: dict[tuple[int, int], int] = {}
    saw_entry = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            pending.append(line)
            continue
        if line.startswith("!"):
            directive, _, rest = line.partition(" ")
            if directive != "!complete":
                raise CatalogError(f"line {lineno}: unknown directive {directive!r}")
            complete |= _parse_order_list(rest, lineno)
            if not saw_entry:
                header.extend(pending)
                pending.clear()
            continue
        entry = _parse_entry(line, lineno, comments=tuple(pending))
        pending.clear()
        if entry.gid in seen:
            raise CatalogError(
                f"line {lineno}: duplicate id {list(entry.gid)} "
                f"(first at line {seen[entry.gid]})"
            )
        seen[entry.gid] = lineno
        entries.append(entry)
        saw_entry = True
    if pending and not saw_entry:
        header.extend(pending)
        pending.clear()
    return Catalog(
        entries=entries,
        complete_orders=frozenset(complete),
        header=tuple(header),
        trailer=tuple(pending),
    )


def _format_order_list(orders: frozenset[int]) -> str:
    out = []
    run_start = None
    prev = None
    for o in sorted(orders):
        if run_start is None:
            run_start = prev = o
            continue
        if o == prev + 1:
            prev = o
            continue
        out.append(f"{run_start}-{prev}" if prev > run_start else str(run_start))
        run_start = prev = o
    if run_start is not None:
        out.append(f"{run_start}-{prev}" if prev > run_start else str(run_start))
    return " ".join(out)


def write_catalog(catalog: Catalog) -> str:
    """Canonical text form; parse(write(c)) == c and write is idempotent."""
    lines: list[str] = list(catalog.header)
    if catalog.complete_orders:
        lines.append(f"!complete {_format_order_list(catalog.complete_orders)}")
    for entry in catalog.entries:
        lines.extend(entry.comments)
        gens = " ; ".join(format_cycles(g) for g in entry.generators)
        lines.append(f"{entry.order} {entry.index} {entry.name} : {gens}")
    lines.extend(catalog.trailer)
    return "\n".join(lines) + "\n" if lines else ""


def validate_catalog(catalog: Catalog, oracle_check: bool = True) -> list[str]:
    """Re-close every entry and check completeness claims; returns diagnostics."""
    from .isomorphism import fingerprint, is_isomorphic

    diagnostics: list[str] = []
    for entry in catalog.entries:
        try:
            entry.group()
        except (CatalogError, GroupError) as exc:
            diagnostics.append(str(exc))

    for order in sorted(catalog.complete_orders):
        members = [e for e in catalog.entries_of_order(order)]
        if not members:
            diagnostics.append(f"order {order} declared complete but has no entries")
            continue
        indices = sorted(e.index for e in members)
        if indices != list(range(1, len(members) + 1)):
            diagnostics.append(
                f"order {order}: indices {indices} are not 1..{len(members)}"
            )
        groups = []
        for e in members:
            try:
                groups.append((e, e.group()))
            except (CatalogError, GroupError):
                pass  # already reported above
        buckets: dict = {}
        for e, g in groups:
            buckets.setdefault(fingerprint(g), []).append((e, g))
        for bucket in buckets.values():
            for i, (ea, ga) in enumerate(bucket):
                for eb, gb in bucket[i + 1:]:
                    if is_isomorphic(ga, gb):
                        diagnostics.append(
                            f"order {order}: entries {ea.index} and {eb.index} "
                            f"are isomorphic"
                        )
        if oracle_check and order <= 10:
            from .oracle import enumerate_order

            oracle_count = len(enumerate_order(order))
            if len(members) != oracle_count:
                diagnostics.append(
                    f"order {order}: {len(members)} entries but exhaustive "
                    f"enumeration finds {oracle_count} classes"
                )
    return diagnostics


def bundled_desk_catalog() -> Catalog:
    """The catalog shipped with the package, complete for orders 1..40."""
    text = resources.files("cycdelta").joinpath("data/desk_catalog.txt").read_text(
        encoding="utf-8"
    )
    return parse_catalog(text)
