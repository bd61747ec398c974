import pytest
from hypothesis import given
from hypothesis import strategies as st

from cycdelta.perm import (
    Permutation,
    PermutationError,
    compose,
    format_cycles,
    from_cycles,
    identity,
    parse_cycles,
)


def test_images_must_be_a_permutation():
    with pytest.raises(PermutationError):
        Permutation((1, 1, 3))
    with pytest.raises(PermutationError):
        Permutation((0, 1, 2))


def test_compose_applies_right_factor_first():
    a = Permutation((2, 1, 3))
    b = Permutation((1, 3, 2))
    assert compose(a, b).images == (2, 3, 1)
    assert (a * b)(2) == 3


def test_pow_and_inverse():
    c = Permutation((2, 3, 4, 1))
    assert c ** 4 == identity(4)
    assert c ** -1 == c.inverse()
    assert (c ** -3) * (c ** 3) == identity(4)


def test_order_is_lcm_of_cycle_lengths():
    p = from_cycles([(1, 2), (3, 4, 5)], 5)
    assert p.order() == 6
    assert identity(3).order() == 1


def test_cycle_notation_round_trip():
    p = from_cycles([(1, 2, 3), (4, 5)], 6)
    assert parse_cycles(format_cycles(p), 6) == p
    assert format_cycles(identity(1)) == "(1)"
    assert parse_cycles("(1)", 1) == identity(1)


def test_parse_cycles_rejects_garbage():
    with pytest.raises(PermutationError):
        parse_cycles("(1,2", 3)
    with pytest.raises(PermutationError):
        parse_cycles("(1,2,2)", 3)
    with pytest.raises(PermutationError):
        parse_cycles("(1,2,5)", 3)


def test_overlapping_cycles_multiply_rightmost_first():
    # (2,3) acts first, then (1,2): so 2 -> 3, 3 -> 2 -> 1, 1 -> 2
    assert parse_cycles("(1,2)(2,3)", 3).images == (2, 3, 1)


@given(st.permutations(list(range(1, 9))))
def test_inverse_cancels(images):
    p = Permutation(tuple(images))
    assert p * p.inverse() == identity(8)
    assert p ** p.order() == identity(8)
