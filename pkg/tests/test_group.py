import pytest

from cycdelta.constructors import abelian, cyclic, dicyclic, dihedral
from cycdelta.group import (
    ClosureError,
    Group,
    closure,
    cyclic_subgroup_count,
    delta,
    delta_report,
    i2,
    is_elementary_abelian_2,
    order_census,
    star_identity,
)
from cycdelta.perm import Permutation, parse_cycles


def test_closure_of_dihedral_generators():
    r = parse_cycles("(1,2,3,4)", 4)
    s = parse_cycles("(2,4)", 4)
    assert len(closure([r, s])) == 8


def test_closure_cap_trips():
    with pytest.raises(ClosureError):
        closure([parse_cycles("(1,2,3,4,5,6,7,8)", 8)], cap=4)


def test_generate_puts_identity_first():
    g = Group.generate([parse_cycles("(1,2,3)", 3)], name="C3")
    assert g.order == 3
    assert g.elements[0].is_identity()


def test_generate_checks_declared_order():
    with pytest.raises(ClosureError):
        Group.generate([parse_cycles("(1,2,3)", 3)], cap=2)


def test_order_census_d8():
    census = order_census(dihedral(8))
    assert census.counts == {1: 1, 2: 5, 4: 2}


def test_cyclic_subgroup_count_d8():
    # five involutions, one C4 shared by both order-4 elements, plus the trivial one
    assert cyclic_subgroup_count(dihedral(8)) == 7


def test_delta_small_groups():
    assert delta(cyclic(1)) == 0
    assert delta(cyclic(6)) == 2
    assert delta(dihedral(8)) == 1
    assert delta(dicyclic(8)) == 3


def test_delta_of_cyclic_is_order_minus_divisor_count():
    for n in range(1, 25):
        tau = sum(1 for d in range(1, n + 1) if n % d == 0)
        assert delta(cyclic(n)) == n - tau


def test_i2_counts_identity_too():
    assert i2(dicyclic(8)) == 2
    assert i2(dihedral(8)) == 6
    assert i2(abelian([2, 2])) == 4


def test_star_identity_components():
    total, order, surplus, deficiency = star_identity(dihedral(12))
    assert total == order == 12
    assert surplus == deficiency == delta(dihedral(12))


def test_delta_report_fields():
    rep = delta_report(dihedral(8))
    assert rep.group_order == 8
    assert rep.cyclic_count == 7
    assert rep.delta == 1
    assert rep.i2 == 6
    assert rep.bound_ok and rep.equality_case


def test_delta_zero_is_elementary_abelian_two():
    assert is_elementary_abelian_2(cyclic(1))
    assert is_elementary_abelian_2(abelian([2, 2, 2]))
    assert not is_elementary_abelian_2(cyclic(4))
    for g in (cyclic(2), abelian([2, 2]), cyclic(4), cyclic(6)):
        assert (delta(g) == 0) == is_elementary_abelian_2(g)


def test_center_and_derived_orders():
    d8 = dihedral(8)
    assert d8.center_order() == 2
    assert d8.derived_subgroup_order() == 2
    assert d8.exponent() == 4
    assert abelian([4, 2]).is_abelian()
    assert not d8.is_abelian()
