"""Builders for the standard small-group families.

Everything returns a Group of permutations.  Matrix families act on the 8
nonzero vectors of F_3^2; dicyclic groups and semidirect products are
realized through the regular representation of the abstract group, which
keeps the construction obviously correct at the cost of a larger degree.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .group import Group, GroupError
from .perm import Permutation, compose, from_cycles, identity


# ── core families ──────────────────────────────────────────────────


def cyclic(n: int) -> Group:
    if n < 1:
        raise GroupError(f"cyclic group order must be >= 1, got {n}")
    if n == 1:
        return Group([identity(1)], [identity(1)], name="C1")
    gen = Permutation(tuple(range(2, n + 1)) + (1,))
    return Group.generate([gen], name=f"C{n}")


def abelian(factors: Sequence[int]) -> Group:
    """Direct product of cyclic groups, e.g. abelian([4, 2]) = C4 x C2."""
    factors = [int(f) for f in factors]
    if not factors or any(f < 1 for f in factors):
        raise GroupError(f"bad abelian factor list {factors!r}")
    nontrivial = [f for f in factors if f > 1]
    if not nontrivial:
        return cyclic(1)
    out = cyclic(nontrivial[0])
    for f in nontrivial[1:]:
        out = direct_product(out, cyclic(f))
    out.name = "x".join(f"C{f}" for f in nontrivial)
    return out


def dihedral(order: int) -> Group:
    """Dihedral group of the given (even) order, on n = order/2 points."""
    if order < 2 or order % 2 != 0:
        raise GroupError(f"dihedral order must be even and >= 2, got {order}")
    n = order // 2
    if n == 1:
        return Group.generate([Permutation((2, 1))], name="D2")
    if n == 2:
        gens = [from_cycles([(1, 2)], 4), from_cycles([(3, 4)], 4)]
        return Group.generate(gens, name="D4")
    rot = Permutation(tuple(range(2, n + 1)) + (1,))
    refl = Permutation((1,) + tuple(range(n, 1, -1)))
    return Group.generate([rot, refl], name=f"D{order}")


def dicyclic(order: int) -> Group:
    """Dicyclic group of order 4n: <a, b | a^(2n) = 1, b^2 = a^n, bab^-1 = a^-1>."""
    if order % 4 != 0 or order < 4:
        raise GroupError(f"dicyclic order must be a positive multiple of 4, got {order}")
    if order == 4:
        return cyclic(4)
    n2 = order // 2  # order of a; b^2 = a^(n2/2), bab^-1 = a^-1
    elems = [(i, j) for j in (0, 1) for i in range(n2)]

    def mul(x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
        i1, j1 = x
        i2, j2 = y
        if j1 == 0:
            return ((i1 + i2) % n2, j2)
        i = (i1 - i2) % n2
        if j2 == 1:
            return ((i + n2 // 2) % n2, 0)
        return (i, 1)

    return _regular_rep(elems, mul, gens=[(1, 0), (0, 1)], name=f"Q{order}")


def symmetric(n: int) -> Group:
    if n < 1:
        raise GroupError(f"symmetric degree must be >= 1, got {n}")
    if n == 1:
        return Group([identity(1)], [identity(1)], name="S1")
    if n == 2:
        return Group.generate([Permutation((2, 1))], name="S2")
    swap = from_cycles([(1, 2)], n)
    cycle = Permutation(tuple(range(2, n + 1)) + (1,))
    return Group.generate([swap, cycle], name=f"S{n}", cap=_factorial(n))


def alternating(n: int) -> Group:
    if n < 1:
        raise GroupError(f"alternating degree must be >= 1, got {n}")
    if n <= 2:
        return Group([identity(max(n, 1))], [identity(max(n, 1))], name=f"A{n}")
    if n == 3:
        return Group.generate([from_cycles([(1, 2, 3)], 3)], name="A3")
    three = from_cycles([(1, 2, 3)], n)
    if n % 2 == 1:
        big = Permutation(tuple(range(2, n + 1)) + (1,))
    else:
        big = from_cycles([tuple(range(2, n + 1))], n)
    return Group.generate([three, big], name=f"A{n}", cap=_factorial(n) // 2)


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


# ── matrix groups over F_3 ─────────────────────────────────────────

_F3_VECTORS = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]


def _matrix_perm(m: tuple[tuple[int, int], tuple[int, int]]) -> Permutation:
    images = []
    for v in _F3_VECTORS:
        w = (
            (m[0][0] * v[0] + m[0][1] * v[1]) % 3,
            (m[1][0] * v[0] + m[1][1] * v[1]) % 3,
        )
        images.append(_F3_VECTORS.index(w) + 1)
    return Permutation(images)


def sl23() -> Group:
    """SL(2,3) acting on the nonzero vectors of F_3^2."""
    gens = [_matrix_perm(((1, 1), (0, 1))), _matrix_perm(((0, 2), (1, 0)))]
    g = Group.generate(gens, name="SL(2,3)", cap=24)
    if g.order != 24:
        raise GroupError(f"SL(2,3) construction came out with order {g.order}")
    return g


def gl23() -> Group:
    """GL(2,3) acting on the nonzero vectors of F_3^2."""
    gens = [
        _matrix_perm(((1, 1), (0, 1))),
        _matrix_perm(((0, 2), (1, 0))),
        _matrix_perm(((1, 0), (0, 2))),
    ]
    g = Group.generate(gens, name="GL(2,3)", cap=48)
    if g.order != 48:
        raise GroupError(f"GL(2,3) construction came out with order {g.order}")
    return g


# ── combinators ────────────────────────────────────────────────────


def direct_product(a: Group, b: Group) -> Group:
    """A x B on the disjoint union of the two point sets."""
    da, db = a.degree, b.degree

    def pair(pa: Permutation, pb: Permutation) -> Permutation:
        return Permutation(pa.images + tuple(img + da for img in pb.images))

    elements = [pair(pa, pb) for pa in a.elements for pb in b.elements]
    ident_a, ident_b = identity(da), identity(db)
    gens = [pair(g, ident_b) for g in a.generators] + [pair(ident_a, g) for g in b.generators]
    name = None
    if a.name and b.name:
        name = f"{_pname(a.name)}x{_pname(b.name)}"
    return Group(elements, gens, name=name)


def _pname(name: str) -> str:
    return f"({name})" if ":" in name and not name.startswith("(") else name


def _regular_rep(
    elems: list, mul: Callable, gens: list, name: str | None = None
) -> Group:
    """Permutation group from an abstract multiplication table (left-regular action).

    elems[0] must be the identity.
    """
    index = {e: i for i, e in enumerate(elems)}
    n = len(elems)

    def row(x) -> Permutation:
        return Permutation(tuple(index[mul(x, e)] + 1 for e in elems))

    elements = [row(x) for x in elems]
    return Group(elements, [row(g) for g in gens], name=name)


def _automorphism_from_images(
    normal: Group, images: Sequence[Permutation]
) -> dict[tuple, tuple]:
    """Extend generator images to an automorphism of `normal`, or raise."""
    from .isomorphism import extend_generator_map

    if len(images) != len(normal.generators):
        raise GroupError(
            f"action needs {len(normal.generators)} generator images, got {len(images)}"
        )
    for img in images:
        if img not in normal:
            raise GroupError(f"action image {img} is not in the normal subgroup")
    mapping = extend_generator_map(normal, normal, list(zip(normal.generators, images)))
    if mapping is None or len(mapping) != normal.order:
        raise GroupError("action does not extend to an automorphism of the normal part")
    return mapping


def semidirect(
    normal: Group,
    acting: Group,
    action: Sequence[Sequence[Permutation]],
    name: str | None = None,
) -> Group:
    """Semidirect product N x| H via the regular representation.

    `action[j]` lists the images of N's generators under the automorphism
    assigned to H's j-th generator.  The generator assignment must extend to
    a homomorphism H -> Aut(N); this is validated before building.
    """
    if len(action) != len(acting.generators):
        raise GroupError(
            f"action needs one row per acting generator ({len(acting.generators)}), "
            f"got {len(action)}"
        )
    gen_autos = [_automorphism_from_images(normal, row) for row in action]

    # Propagate to every element of H along its Cayley graph, then verify
    # the result really is a homomorphism (a bad action can still propagate).
    ident_auto = {p.images: p.images for p in normal.elements}
    autos: dict[tuple, dict] = {identity(acting.degree).images: ident_auto}
    frontier = [identity(acting.degree)]
    while frontier:
        new = []
        for h in frontier:
            base = autos[h.images]
            for g, phi_g in zip(acting.generators, gen_autos):
                hg = compose(h, g)
                if hg.images in autos:
                    continue
                autos[hg.images] = {x: base[phi_g[x]] for x in ident_auto}
                new.append(hg)
        frontier = new
    if len(autos) != acting.order:
        raise GroupError("failed to propagate action over the acting group")
    for h1 in acting.elements:
        a1 = autos[h1.images]
        for h2 in acting.elements:
            a2 = autos[h2.images]
            a12 = autos[compose(h1, h2).images]
            if any(a1[a2[x]] != a12[x] for x in ident_auto):
                raise GroupError("action is not a homomorphism into Aut(N)")

    n_index = {p.images: p for p in normal.elements}
    elems = [(n.images, h.images) for h in acting.elements for n in normal.elements]
    ident_pair = (identity(normal.degree).images, identity(acting.degree).images)
    elems.remove(ident_pair)
    elems.insert(0, ident_pair)

    def mul(x: tuple, y: tuple) -> tuple:
        n1, h1 = x
        n2, h2 = y
        twisted = autos[h1][n2]
        prod_n = compose(Permutation(n1), Permutation(twisted))
        prod_h = compose(Permutation(h1), Permutation(h2))
        return (prod_n.images, prod_h.images)

    gens = [(g.images, identity(acting.degree).images) for g in normal.generators]
    gens += [(identity(normal.degree).images, g.images) for g in acting.generators]
    if name is None and normal.name and acting.name:
        name = f"{_sname(normal.name)}:{_sname(acting.name)}"
    return _regular_rep(elems, mul, gens, name=name)


def _sname(name: str) -> str:
    return f"({name})" if ("x" in name or ":" in name) and not name.startswith("(") else name


def diagonal_action(normal: Group, exponents: Sequence[int]) -> list[Permutation]:
    """Action row sending each normal generator g_i to g_i ** k_i.

    A single exponent is broadcast to all generators.
    """
    ks = list(exponents)
    if len(ks) == 1:
        ks = ks * len(normal.generators)
    if len(ks) != len(normal.generators):
        raise GroupError(
            f"need {len(normal.generators)} exponents, got {len(exponents)}"
        )
    return [g ** k for g, k in zip(normal.generators, ks)]


# ── GroupSpec: declarative construction ────────────────────────────

_ATOMS: dict[str, Callable[..., Group]] = {
    "cyclic": cyclic,
    "abelian": abelian,
    "dihedral": dihedral,
    "dicyclic": dicyclic,
    "symmetric": symmetric,
    "alternating": alternating,
    "sl23": sl23,
    "gl23": gl23,
}


@dataclass(frozen=True)
class GroupSpec:
    """Constructor name plus parameters; products and semidirects nest specs."""

    kind: str
    params: tuple[int, ...] = ()
    parts: tuple["GroupSpec", ...] = ()
    action: tuple[tuple[int, ...], ...] = ()

    def describe(self) -> str:
        if self.kind == "direct_product":
            return "x".join(p.describe() for p in self.parts)
        if self.kind == "semidirect":
            rows = ";".join(",".join(str(k) for k in row) for row in self.action)
            return f"({self.parts[0].describe()}):({self.parts[1].describe()})@{rows}"
        if self.params:
            return f"{self.kind}{list(self.params)}"
        return self.kind


def build(spec: GroupSpec) -> Group:
    if spec.kind == "direct_product":
        if len(spec.parts) < 2:
            raise GroupError("direct_product needs at least two parts")
        out = build(spec.parts[0])
        for part in spec.parts[1:]:
            out = direct_product(out, build(part))
        return out
    if spec.kind == "semidirect":
        if len(spec.parts) != 2:
            raise GroupError("semidirect needs exactly normal and acting parts")
        normal = build(spec.parts[0])
        acting = build(spec.parts[1])
        if not spec.action:
            raise GroupError("semidirect spec needs an action (exponent rows)")
        rows = [diagonal_action(normal, row) for row in spec.action]
        return semidirect(normal, acting, rows)
    fn = _ATOMS.get(spec.kind)
    if fn is None:
        raise GroupError(f"unknown constructor kind {spec.kind!r}")
    if spec.kind == "abelian":
        return fn(list(spec.params))
    return fn(*spec.params)


# ── the bound's equality family ────────────────────────────────────


def build_d8_c2k(k: int) -> Group:
    """D8 x C2^k, the unique family attaining |G| = 8 * delta(G)."""
    if k < 0:
        raise GroupError(f"k must be >= 0, got {k}")
    g = dihedral(8)
    for _ in range(k):
        g = direct_product(g, cyclic(2))
    g.name = "D8" + "xC2" * k
    return g


# ── reference family: the 25 groups with deficiency 1..5 ──────────


def _group_16_3() -> Group:
    # (C4xC2):C2, the rank-2 one: C2^2 x| C4 with the 4-cycle swapping the factors.
    n = abelian([2, 2])
    x, y = n.generators
    g = semidirect(n, cyclic(4), [[y, x]], name="(C4xC2):C2")
    return g


def _group_16_13() -> Group:
    # (C4xC2):C2, the central-product one: D8 extended by the inner action of r.
    n = dihedral(8)
    r, s = n.generators
    return semidirect(n, cyclic(2), [[r, compose(r ** 2, s)]], name="(C4xC2):C2")


def small_deficiency_suite() -> list[tuple[Group, int]]:
    """All 25 groups with deficiency between 1 and 5, with expected values.

    Each group carries its (order, index) id in the standard small-group
    numbering as metadata.
    """
    entries: list[tuple[Group, int, tuple[int, int]]] = [
        (cyclic(3), 1, (3, 1)),
        (cyclic(4), 1, (4, 1)),
        (symmetric(3), 1, (6, 1)),
        (dihedral(8), 1, (8, 3)),
        (cyclic(6), 2, (6, 2)),
        (abelian([4, 2]), 2, (8, 2)),
        (dihedral(12), 2, (12, 4)),
        (direct_product(cyclic(2), dihedral(8)), 2, (16, 11)),
        (cyclic(5), 3, (5, 1)),
        (dicyclic(8), 3, (8, 4)),
        (dihedral(10), 3, (10, 1)),
        (cyclic(8), 4, (8, 1)),
        (abelian([3, 3]), 4, (9, 2)),
        (alternating(4), 4, (12, 3)),
        (abelian([6, 2]), 4, (12, 5)),
        (_group_16_3(), 4, (16, 3)),
        (dihedral(16), 4, (16, 7)),
        (abelian([4, 2, 2]), 4, (16, 10)),
        (_group_16_13(), 4, (16, 13)),
        (semidirect(abelian([3, 3]), cyclic(2), [diagonal_action(abelian([3, 3]), [-1])],
                    name="(C3xC3):C2"), 4, (18, 4)),
        (direct_product(abelian([2, 2]), symmetric(3)), 4, (24, 14)),
        (direct_product(abelian([2, 2]), dihedral(8)), 4, (32, 46)),
        (cyclic(7), 5, (7, 1)),
        (dicyclic(12), 5, (12, 1)),
        (dihedral(14), 5, (14, 1)),
    ]
    out = []
    for g, expected, gid in entries:
        g.gid = gid
        out.append((g, expected))
    return out


# ── expression parser for the CLI ──────────────────────────────────

_NAMED = {"SL(2,3)": sl23, "GL(2,3)": gl23, "SL23": sl23, "GL23": gl23}


class SpecSyntaxError(GroupError):
    pass


def parse_group_expr(text: str) -> Group:
    """Parse expressions like D8, C3xC3, Q8, S4, (C3xC3):C2@-1, C5:C4@2.

    Atoms: C<n>, D<order>, Q<order>, S<n>, A<n>, SL(2,3), GL(2,3).  'x' is
    direct product; 'N:H@k1,k2,...' is a semidirect product where H's
    generator sends the i-th generator of N to its k_i-th power (one k is
    broadcast to all generators).  H must be cyclic here; richer actions are
    available through the library API.
    """
    parser = _ExprParser(text.replace(" ", ""))
    group = parser.parse_expr()
    parser.expect_end()
    return group


class _ExprParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str) -> SpecSyntaxError:
        return SpecSyntaxError(f"{msg} at position {self.pos} in {self.text!r}")

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect_end(self) -> None:
        if self.pos != len(self.text):
            raise self.error(f"unexpected trailing input {self.text[self.pos:]!r}")

    def parse_expr(self) -> Group:
        left = self.parse_product()
        if self.peek() == ":":
            self.pos += 1
            right = self.parse_product()
            if self.peek() != "@":
                raise self.error("semidirect product needs an explicit @action")
            self.pos += 1
            exps = self.parse_exponents()
            if len(right.generators) != 1:
                raise SpecSyntaxError(
                    "expression semidirects need a cyclic acting group; "
                    "use the library API for more"
                )
            return semidirect(left, right, [diagonal_action(left, exps)])
        return left

    def parse_product(self) -> Group:
        out = self.parse_atom()
        while self.peek() == "x":
            self.pos += 1
            out = direct_product(out, self.parse_atom())
        return out

    def parse_atom(self) -> Group:
        for literal, fn in _NAMED.items():
            if self.text.startswith(literal, self.pos):
                self.pos += len(literal)
                return fn()
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            inner = self.parse_expr()
            if self.peek() != ")":
                raise self.error("missing closing parenthesis")
            self.pos += 1
            return inner
        if ch in "CDQSA":
            self.pos += 1
            n = self.parse_int()
            return {
                "C": cyclic,
                "D": dihedral,
                "Q": dicyclic,
                "S": symmetric,
                "A": alternating,
            }[ch](n)
        raise self.error("expected a group atom")

    def parse_int(self) -> int:
        start = self.pos
        if self.peek() == "-":
            self.pos += 1
        while self.peek().isdigit():
            self.pos += 1
        if self.pos == start or self.text[start:self.pos] == "-":
            raise self.error("expected an integer")
        return int(self.text[start:self.pos])

    def parse_exponents(self) -> list[int]:
        exps = [self.parse_int()]
        while self.peek() == ",":
            self.pos += 1
            exps.append(self.parse_int())
        return exps
