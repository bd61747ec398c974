import pytest

from cycdelta.constructors import (
    GroupSpec,
    SpecSyntaxError,
    abelian,
    alternating,
    build,
    build_d8_c2k,
    cyclic,
    diagonal_action,
    dicyclic,
    dihedral,
    direct_product,
    gl23,
    parse_group_expr,
    small_deficiency_suite,
    semidirect,
    sl23,
    symmetric,
)
from cycdelta.group import GroupError, delta, order_census
from cycdelta.isomorphism import is_isomorphic


def test_cyclic_orders():
    for n in (1, 2, 7, 12):
        g = cyclic(n)
        assert g.order == n
        assert g.exponent() == n


def test_abelian_drops_trivial_factors():
    g = abelian([1, 4, 2])
    assert g.order == 8
    assert g.name == "C4xC2"


def test_dihedral_census():
    assert order_census(dihedral(12)).counts == {1: 1, 2: 7, 3: 2, 6: 2}
    with pytest.raises(GroupError):
        dihedral(7)


def test_dicyclic_is_quaternion_at_8():
    q8 = dicyclic(8)
    assert order_census(q8).counts == {1: 1, 2: 1, 4: 6}
    with pytest.raises(GroupError):
        dicyclic(10)


def test_symmetric_and_alternating():
    assert symmetric(4).order == 24
    assert alternating(4).order == 12
    assert alternating(5).order == 60
    assert is_isomorphic(symmetric(3), dihedral(6))


def test_linear_groups():
    assert order_census(sl23()).counts == {1: 1, 2: 1, 3: 8, 4: 6, 6: 8}
    assert gl23().order == 48
    assert delta(sl23()) == 11
    assert delta(gl23()) == 20


def test_direct_product():
    g = direct_product(cyclic(3), cyclic(4))
    assert g.order == 12
    assert g.degree == 7
    assert is_isomorphic(g, cyclic(12))
    assert direct_product(dihedral(8), cyclic(2)).name == "D8xC2"


def test_semidirect_inverting_action():
    n = abelian([3, 3])
    g = semidirect(n, cyclic(2), [diagonal_action(n, [-1])])
    assert g.order == 18
    assert delta(g) == 4


def test_semidirect_rejects_non_action():
    # x -> x^2 generates an order-4 subgroup of Aut(C5); C2 cannot act by it
    n = cyclic(5)
    with pytest.raises(GroupError):
        semidirect(n, cyclic(2), [diagonal_action(n, [2])])


def test_diagonal_action_broadcasts():
    n = abelian([4, 2])
    row = diagonal_action(n, [-1])
    assert len(row) == 2
    assert row[0] == n.generators[0] ** -1


def test_build_d8_c2k():
    g = build_d8_c2k(2)
    assert g.order == 32
    assert delta(g) == 4
    assert is_isomorphic(build_d8_c2k(0), dihedral(8))


def test_build_from_spec():
    assert build(GroupSpec(kind="dihedral", params=(10,))).order == 10
    nested = GroupSpec(
        kind="direct_product",
        parts=(GroupSpec(kind="cyclic", params=(3,)), GroupSpec(kind="cyclic", params=(5,))),
    )
    assert build(nested).order == 15
    with pytest.raises(GroupError):
        build(GroupSpec(kind="frobnicate"))


def test_parse_group_expr():
    assert parse_group_expr("C12").order == 12
    assert is_isomorphic(parse_group_expr("C3xC4"), cyclic(12))
    assert parse_group_expr("SL(2,3)").order == 24
    f20 = parse_group_expr("C5:C4@2")
    assert f20.order == 20
    assert delta(f20) == 8
    with pytest.raises(SpecSyntaxError):
        parse_group_expr("NOPE")
    with pytest.raises(SpecSyntaxError):
        parse_group_expr("C4x")


def test_family_suite_deltas_recompute():
    rows = small_deficiency_suite()
    assert len(rows) == 25
    for g, expected in rows:
        assert delta(g) == expected, g.name
