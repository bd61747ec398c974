"""Exhaustive enumeration of groups of order <= 10, independent of everything else.

A group of order n is a set of n rows (left-multiplication permutations of
the points 0..n-1) containing the identity row and closed under composition.
The search normalizes the row of point 1 to a uniform shift, fills remaining
rows depth-first under Latin and uniform-cycle-type constraints, propagates
products, and rejects isomorphs by a canonical minimal multiplication table.
Only the Permutation/Group carrier types are shared with the rest of the
package, so agreement with constructors or catalog data is real evidence.
"""
from __future__ import annotations

from dataclasses import dataclass

from .group import Group
from .perm import Permutation

ORACLE_MAX_ORDER = 10


class OracleError(ValueError):
    pass


@dataclass(frozen=True)
class CayleyTable:
    """n x n multiplication table over element indices; element 0 is the identity."""

    n: int
    table: tuple[tuple[int, ...], ...]


def is_latin(t: CayleyTable) -> bool:
    full = set(range(t.n))
    for row in t.table:
        if set(row) != full:
            return False
    for j in range(t.n):
        if {t.table[i][j] for i in range(t.n)} != full:
            return False
    return True


def has_identity(t: CayleyTable) -> bool:
    return all(t.table[0][j] == j for j in range(t.n)) and all(
        t.table[i][0] == i for i in range(t.n)
    )


def is_associative(t: CayleyTable) -> bool:
    rng = range(t.n)
    tab = t.table
    return all(
        tab[tab[a][b]][c] == tab[a][tab[b][c]] for a in rng for b in rng for c in rng
    )


def validate_table(t: CayleyTable) -> None:
    if len(t.table) != t.n or any(len(r) != t.n for r in t.table):
        raise OracleError("table is not n x n")
    if not has_identity(t):
        raise OracleError("element 0 is not an identity")
    if not is_latin(t):
        raise OracleError("table is not a Latin square")
    if not is_associative(t):
        raise OracleError("table is not associative")


def table_to_group(t: CayleyTable) -> Group:
    """Regular representation: row i becomes the permutation j -> table[i][j]."""
    elems = [Permutation(tuple(v + 1 for v in row)) for row in t.table]
    gens = [e for e in elems[1:]] or [elems[0]]
    return Group(elems, gens)


# ── canonical form ─────────────────────────────────────────────────


def _row_cycle_lengths(row: tuple[int, ...]) -> set[int]:
    seen = [False] * len(row)
    lengths = set()
    for start in range(len(row)):
        if seen[start]:
            continue
        k, p = 0, start
        while not seen[p]:
            seen[p] = True
            p = row[p]
            k += 1
        lengths.add(k)
    return lengths


def _element_order(table: tuple[tuple[int, ...], ...], x: int) -> int:
    k, p = 1, x
    while p != 0:
        p = table[p][x]
        k += 1
    return k


def _span(table: tuple[tuple[int, ...], ...], seq: tuple[int, ...]) -> set[int]:
    reached = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for s in seq:
                y = table[x][s]
                if y not in reached:
                    reached.add(y)
                    nxt.append(y)
        frontier = nxt
    return reached


def _relabeled(table: tuple[tuple[int, ...], ...], seq: tuple[int, ...]) -> tuple:
    """Table rewritten with elements numbered in BFS order along seq."""
    n = len(table)
    label = {0: 0}
    order = [0]
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for s in seq:
                y = table[x][s]
                if y not in label:
                    label[y] = len(order)
                    order.append(y)
                    nxt.append(y)
        frontier = nxt
    return tuple(
        tuple(label[table[a][b]] for b in order) for a in order
    )


def canonical_table(t: CayleyTable) -> tuple:
    """Minimal relabeled table over BFS labelings from short generating tuples.

    The labelings considered are exactly the BFS orders of generating tuples
    of minimal length, which an isomorphism maps onto each other, so two
    tables get the same canonical form iff the groups are isomorphic.
    """
    n = t.n
    if n == 1:
        return ((0,),)
    table = t.table
    orders = {x: _element_order(table, x) for x in range(1, n)}
    max_order = max(orders.values())
    firsts = [x for x in range(1, n) if orders[x] == max_order]

    best: tuple | None = None
    stack: list[tuple[tuple[int, ...], set[int]]] = [
        ((x,), _span(table, (x,))) for x in firsts
    ]
    # Grow tuples breadth-first by length so only minimal-length generating
    # tuples are relabeled; non-generating tuples extend by out-of-span elements.
    while stack:
        complete = [seq for seq, span in stack if len(span) == n]
        if complete:
            for seq in complete:
                cand = _relabeled(table, seq)
                if best is None or cand < best:
                    best = cand
            return best
        nxt = []
        for seq, span in stack:
            for x in range(1, n):
                if x in span:
                    continue
                seq2 = seq + (x,)
                span2 = span | _span_from(table, span, x)
                nxt.append((seq2, span2))
        stack = nxt
    raise OracleError("no generating tuple found")


def _span_from(table, span: set[int], x: int) -> set[int]:
    reached = set(span) | {x}
    frontier = list(reached)
    while frontier:
        nxt = []
        for a in frontier:
            for b in (x,) + tuple(span):
                y = table[a][b]
                if y not in reached:
                    reached.add(y)
                    nxt.append(y)
        frontier = nxt
    return reached


# ── the search ─────────────────────────────────────────────────────


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _shift_row(n: int, d: int) -> tuple[int, ...]:
    """Product of n/d consecutive d-cycles on 0..n-1."""
    images = [0] * n
    for block in range(0, n, d):
        for k in range(d):
            images[block + k] = block + (k + 1) % d
    return tuple(images)


def _compose_rows(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(a[b[j]] for j in range(len(a)))


def _uniform_length(row: tuple[int, ...]) -> int | None:
    lengths = _row_cycle_lengths(row)
    return lengths.pop() if len(lengths) == 1 else None


def _row_ok(row: tuple[int, ...], n: int, d_max: int) -> bool:
    d = _uniform_length(row)
    return d is not None and 2 <= d <= d_max and n % d == 0


def _propagate(
    rows: dict[int, tuple[int, ...]], n: int, d_max: int
) -> dict[int, tuple[int, ...]] | None:
    """Close the known rows under composition; None on any contradiction."""
    rows = dict(rows)
    fresh = list(rows)
    while fresh:
        batch, fresh = fresh, []
        in_batch = set(batch)
        pairs = [(a, b) for a in rows for b in batch]
        pairs += [(a, b) for a in batch for b in rows if b not in in_batch]
        for a, b in pairs:
            prod = _compose_rows(rows[a], rows[b])
            p = rows[a][b]
            known = rows.get(p)
            if known is None:
                if not _row_ok(prod, n, d_max):
                    return None
                if any(rows[q][j] == prod[j] for q in rows for j in range(n)):
                    return None
                rows[p] = prod
                fresh.append(p)
            elif known != prod:
                return None
    if n % len(rows) != 0:
        return None
    return rows


def _fill_row(
    rows: dict[int, tuple[int, ...]], point: int, n: int, d_max: int
) -> list[tuple[int, ...]]:
    """All candidate rows for `point` respecting Latin columns and cycle type.

    Positions are filled left to right; whenever a cycle of the partial
    permutation closes its length must be an allowed order, and all closed
    cycles must agree (regular rows have uniform cycle type).
    """
    col_used = [{r[j] for r in rows.values()} for j in range(n)]
    allowed = {d for d in range(2, d_max + 1) if n % d == 0}
    if not allowed:
        return []
    longest = max(allowed)
    images: list[int | None] = [None] * n
    images[0] = point
    out: list[tuple[int, ...]] = []

    def rec(j: int, used: set[int], cycle_len: int | None) -> None:
        if j == n:
            row = tuple(images)
            if _row_ok(row, n, d_max):
                out.append(row)
            return
        for v in range(n):
            if v == j or v in used or v in col_used[j]:
                continue
            # walk the chain j -> v -> ... to the first gap or back to j
            steps, p = 1, v
            while p != j and images[p] is not None:
                p = images[p]
                steps += 1
            new_len = cycle_len
            if p == j:
                if steps not in allowed or (cycle_len is not None and steps != cycle_len):
                    continue
                new_len = steps
            elif steps + 1 > (cycle_len if cycle_len is not None else longest):
                continue
            images[j] = v
            used.add(v)
            rec(j + 1, used, new_len)
            images[j] = None
            used.remove(v)

    rec(1, {point}, None)
    return out


def _search(n: int, d: int) -> list[dict[int, tuple[int, ...]]]:
    """All full row-sets whose point-1 row is the canonical d-shift."""
    identity_row = tuple(range(n))
    base: dict[int, tuple[int, ...]] = {0: identity_row}
    shift = _shift_row(n, d)
    row, point = shift, 1
    while point != 0:
        base[point] = row
        row = _compose_rows(shift, row)
        point = shift[point]

    found: list[dict[int, tuple[int, ...]]] = []

    def rec(rows: dict[int, tuple[int, ...]]) -> None:
        if len(rows) == n:
            found.append(rows)
            return
        point = min(p for p in range(n) if p not in rows)
        for cand in _fill_row(rows, point, n, d_max=d):
            nxt = _propagate({**rows, point: cand}, n, d_max=d)
            if nxt is not None:
                rec(nxt)

    rec(base)
    return found


def enumerate_order(n: int) -> list[Group]:
    """All groups of order n up to isomorphism, as regular permutation groups."""
    if not 1 <= n <= ORACLE_MAX_ORDER:
        raise OracleError(
            f"order {n} outside supported range 1..{ORACLE_MAX_ORDER}"
        )
    if n == 1:
        t = CayleyTable(1, ((0,),))
        validate_table(t)
        return [table_to_group(t)]

    reps: dict[tuple, CayleyTable] = {}
    for d in _divisors(n):
        if d == 1:
            continue
        for rows in _search(n, d):
            t = CayleyTable(n, tuple(rows[i] for i in range(n)))
            validate_table(t)
            key = canonical_table(t)
            if key not in reps:
                reps[key] = t
    ordered = sorted(reps.items(), key=lambda kv: kv[0])
    return [table_to_group(t) for _, t in ordered]
