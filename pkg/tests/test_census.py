"""Census buckets, theorem checks, and report text."""
import json

import pytest

from cycdelta.catalog import parse_catalog
from cycdelta.census import (
    emit_report,
    number_word,
    run_census,
    structured_dict,
    verify_bound,
    verify_miller,
    verify_star,
)

MINI = """\
# indexing: gap
!complete 1-8
1 1 C1 : (1)
2 1 C2 : (1,2)
3 1 C3 : (1,2,3)
4 1 C4 : (1,2,3,4)
4 2 C2xC2 : (1,2) ; (3,4)
5 1 C5 : (1,2,3,4,5)
6 1 S3 : (1,2,3) ; (1,2)
6 2 C6 : (1,2,3)(4,5)
7 1 C7 : (1,2,3,4,5,6,7)
8 1 C8 : (1,2,3,4,5,6,7,8)
8 2 C4xC2 : (1,2,3,4) ; (5,6)
8 3 D8 : (1,2,3,4) ; (1,3)
8 4 Q8 : (1,2,3,4)(5,8,7,6) ; (1,5,3,7)(2,6,4,8)
8 5 C2xC2xC2 : (1,2) ; (3,4) ; (5,6)
"""


def test_number_word():
    assert number_word(0) == "zero"
    assert number_word(4) == "four"
    assert number_word(13) == "thirteen"
    assert number_word(20) == "twenty"
    assert number_word(21) == "twenty-one"
    assert number_word(99) == "ninety-nine"
    with pytest.raises(ValueError):
        number_word(100)
    with pytest.raises(ValueError):
        number_word(-1)


def test_delta_one_bucket_exactly():
    result = run_census(parse_catalog(MINI), delta_max=1)
    assert result.completeness == {1: True}
    got = [(e.gid, r.delta) for e, r in result.per_delta[1]]
    assert got == [((3, 1), 1), ((4, 1), 1), ((6, 1), 1), ((8, 3), 1)]


def test_delta_one_report_text():
    result = run_census(parse_catalog(MINI), delta_max=1)
    assert emit_report(result) == (
        "Four groups with difference 1\n"
        "C3 = [ 3, 1 ]\n"
        "C4 = [ 4, 1 ]\n"
        "S3 = [ 6, 1 ]\n"
        "D8 = [ 8, 3 ]\n"
        "\n"
        "Four groups with difference 0 (elementary abelian 2-groups)\n"
        "C1 = [ 1, 1 ]\n"
        "C2 = [ 2, 1 ]\n"
        "C2xC2 = [ 4, 2 ]\n"
        "C2xC2xC2 = [ 8, 5 ]\n"
    )


def test_incomplete_bucket_is_marked_partial():
    result = run_census(parse_catalog(MINI), delta_max=2)
    assert result.completeness[2] is False
    text = emit_report(result)
    assert "with difference 2 (partial)" in text
    assert [e.name for e, _ in result.per_delta[2]] == ["C6", "C4xC2"]


def test_delta_max_validation():
    with pytest.raises(ValueError):
        run_census(parse_catalog(MINI), delta_max=0)


def test_heading_singular():
    tiny = parse_catalog("!complete 1-8\n3 1 C3 : (1,2,3)\n")
    text = emit_report(run_census(tiny, delta_max=1))
    assert text.startswith("One group with difference 1\n")


def test_structured_report():
    result = run_census(parse_catalog(MINI), delta_max=1)
    data = json.loads(emit_report(result, format="structured"))
    assert data == structured_dict(result)
    assert data["delta_max"] == 1
    (bucket,) = data["buckets"]
    assert bucket["delta"] == 1
    assert bucket["complete"] is True
    assert bucket["count"] == 4
    assert [g["name"] for g in bucket["groups"]] == ["C3", "C4", "S3", "D8"]
    d8 = bucket["groups"][3]["report"]
    assert d8["group_order"] == 8
    assert d8["cyclic_count"] == 7
    assert d8["delta"] == 1
    assert [g["name"] for g in data["delta_zero"]] == [
        "C1", "C2", "C2xC2", "C2xC2xC2",
    ]


def test_unknown_format():
    with pytest.raises(ValueError, match="unknown report format"):
        emit_report(run_census(parse_catalog(MINI), delta_max=1), format="html")


def test_report_is_deterministic():
    cat = parse_catalog(MINI)
    a = emit_report(run_census(cat, delta_max=1))
    b = emit_report(run_census(cat, delta_max=1))
    assert a == b


def test_verifiers_pass_on_mini():
    cat = parse_catalog(MINI)
    assert verify_bound(run_census(cat, delta_max=1)) == []
    assert verify_miller(cat) == []
    assert verify_star(cat) == []


def test_strict_bound_case_not_marked_equality():
    # S3 has order 6 < 8*delta, strictly inside the bound
    cat = parse_catalog("!complete 1-8\n6 1 S3 : (1,2,3) ; (1,2)\n")
    result = run_census(cat, delta_max=1)
    (row,) = result.per_delta[1]
    assert row[1].bound_ok and not row[1].equality_case


def test_equality_cases_flagged(desk):
    # D8 x C2^k attains |G| = 8*delta for delta = 2^k
    result = run_census(desk.restrict(16), delta_max=2)
    eq = [(e.gid, r.delta) for e, r in result.per_delta[2] if r.equality_case]
    assert eq == [((16, 11), 2)]
    assert verify_bound(result) == []


def test_census_on_bundled_catalog(desk):
    result = run_census(desk, delta_max=5)
    assert result.completeness == {d: True for d in range(1, 6)}
    assert [len(result.per_delta[d]) for d in range(1, 6)] == [4, 4, 3, 11, 3]
    assert verify_bound(result) == []
