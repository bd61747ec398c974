"""CLI behaviour through the in-process client, plus one real subprocess."""
import re
import subprocess
import sys

import pytest

from cycdelta.cli import main

MINI = """\
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


@pytest.fixture
def mini_path(tmp_path):
    p = tmp_path / "mini.txt"
    p.write_text(MINI, encoding="utf-8")
    return str(p)


def test_delta_q8(capsys):
    assert main(["delta", "--group", "Q8"]) == 0
    assert capsys.readouterr().out == (
        "name: Q8\n"
        "order: 8\n"
        "cyclic_count: 5\n"
        "delta: 3\n"
        "i2: 2\n"
        "bound_ok: true\n"
        "equality_case: false\n"
    )


def test_delta_bad_expression(capsys):
    assert main(["delta", "--group", "NOPE"]) == 2
    err = capsys.readouterr().err
    assert "expected a group atom at position 0 in 'NOPE'" in err
    assert main(["delta", "--group", "C4x"]) == 2
    assert "expected an integer at position 4" in capsys.readouterr().err


def test_census_text(mini_path, capsys):
    assert main(["census", "--catalog", mini_path, "--delta-max", "1"]) == 0
    out = capsys.readouterr().out
    assert out.startswith(
        "Four groups with difference 1\n"
        "C3 = [ 3, 1 ]\n"
        "C4 = [ 4, 1 ]\n"
        "S3 = [ 6, 1 ]\n"
        "D8 = [ 8, 3 ]\n"
    )


def test_census_out_file(mini_path, tmp_path, capsys):
    out_path = tmp_path / "report.txt"
    code = main(["census", "--catalog", mini_path, "--delta-max", "1",
                 "--out", str(out_path)])
    assert code == 0
    assert capsys.readouterr().out == ""
    assert out_path.read_text().startswith("Four groups with difference 1\n")


def test_census_structured(mini_path, capsys):
    code = main(["census", "--catalog", mini_path, "--delta-max", "1",
                 "--format", "structured"])
    assert code == 0
    assert '"delta_max": 1' in capsys.readouterr().out


def test_census_missing_file(capsys):
    code = main(["census", "--catalog", "/no/such/file", "--delta-max", "1"])
    assert code == 2
    assert "cannot read catalog" in capsys.readouterr().err


def test_verify_clean(mini_path, capsys):
    assert main(["verify", "--catalog", mini_path]) == 0
    assert capsys.readouterr().out == "ok\n"


def test_verify_rejects_malformed(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("4 1 C4 (1,2,3,4)\n", encoding="utf-8")
    assert main(["verify", "--catalog", str(bad)]) == 2
    assert "missing ' : '" in capsys.readouterr().err


def test_catalog_validate_ok(mini_path, capsys):
    assert main(["catalog", "validate", mini_path]) == 0
    assert capsys.readouterr().out == "ok\n"


def test_catalog_validate_reports_problems(tmp_path, capsys):
    dup = tmp_path / "dup.txt"
    dup.write_text(
        "!complete 4\n4 1 C4 : (1,2,3,4)\n4 2 C4b : (2,3,4,1)\n",
        encoding="utf-8",
    )
    assert main(["catalog", "validate", str(dup)]) == 1
    out = capsys.readouterr().out
    assert out == "order 4: entries 1 and 2 are isomorphic\n"


def test_oracle_enumerate(capsys):
    assert main(["oracle", "enumerate", "8"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "order 8: 5 classes"
    assert len(lines) == 6
    deltas = []
    for line in lines[1:]:
        m = re.fullmatch(r"class \d: delta (\d), orders (\d+:\d+ ?)+", line)
        assert m, line
        deltas.append(int(m.group(1)))
    assert sorted(deltas) == [0, 1, 2, 3, 4]


def test_oracle_enumerate_is_deterministic(capsys):
    main(["oracle", "enumerate", "6"])
    first = capsys.readouterr().out
    main(["oracle", "enumerate", "6"])
    assert capsys.readouterr().out == first
    assert first.startswith("order 6: 2 classes\n")


def test_oracle_out_of_range(capsys):
    assert main(["oracle", "enumerate", "11"]) == 2
    assert "capped at order 10" in capsys.readouterr().err


def test_module_invocation():
    proc = subprocess.run(
        [sys.executable, "-m", "cycdelta", "delta", "--group", "D8"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "delta: 1\n" in proc.stdout
