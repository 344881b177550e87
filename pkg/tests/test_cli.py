import json

import pytest

from linecong.cli import main
from linecong.grassmann import FIXTURE_NAMES, fixture_text
from linecong.report import CHECK_IDS, fixtures_covered, run_certificates

FAST = "pfaffian_constant_rank,ex3_fixture,quadric_family_dimension"


def test_every_fixture_is_exercised_by_some_check():
    assert set(FIXTURE_NAMES) <= fixtures_covered()


def test_report_is_byte_stable(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    assert main(["verify", "paper", "--only", FAST, "--out", str(a), "--quiet"]) == 0
    assert main(["verify", "paper", "--only", FAST, "--out", str(b), "--quiet"]) == 0
    assert (a / "report.json").read_bytes() == (b / "report.json").read_bytes()
    data = json.loads((a / "report.json").read_text())
    assert [c["id"] for c in data["checks"]] == FAST.split(",")
    assert {c["status"] for c in data["checks"]} == {"pass"}
    assert all(c["runtime_ms"] is None for c in data["checks"])


def test_report_object_and_exit_code():
    report = run_certificates(["pfaffian_constant_rank"], seed=3)
    assert report.exit_code() == 0
    assert len(CHECK_IDS) == 18


def test_usage_errors_exit_with_two(tmp_path, capsys):
    assert main(["verify", "paper", "--only", "no_such_check", "--out", str(tmp_path), "--quiet"]) == 2
    assert main(["ideal", "show", "--in", str(tmp_path / "missing.txt")]) == 2
    assert main(["bogus"]) == 2
    capsys.readouterr()


def test_ideal_commands_on_a_fixture(tmp_path, capsys):
    src = tmp_path / "C.txt"
    src.write_text(fixture_text("twisted_cubic_C"))
    assert main(["ideal", "invariants", "--in", str(src)]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["dimension"] == 1 and data["degree"] == 3
    out = tmp_path / "gb.txt"
    assert main(["ideal", "gb", "--in", str(src), "--out", str(out)]) == 0
    assert out.read_text().strip()
    assert main(["ideal", "show", "--in", str(src)]) == 0
    assert capsys.readouterr().out.strip()


def test_congruence_and_focal_commands(tmp_path, capsys):
    B = tmp_path / "ex1.txt"
    assert main(["congruence", "build", "--case", "ex1", "--out", str(B)]) == 0
    assert main(["congruence", "multidegree", "--in", str(B)]) == 0
    assert json.loads(capsys.readouterr().out)["multidegree"] == [1, 3, 2]
    X = tmp_path / "X.txt"
    assert main(["focal", "compute", "--case", "ex1", "--out", str(X)]) == 0
    assert main(["ideal", "invariants", "--in", str(X)]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["dimension"] == 3 and data["degree"] == 6


@pytest.mark.parametrize("argv", [["focal", "compute", "--case", "nope"],
                                  ["congruence", "build", "--case", "quadratic", "--coefficients", "1,2"]])
def test_bad_arguments(argv, capsys):
    assert main(argv) == 2
    capsys.readouterr()
