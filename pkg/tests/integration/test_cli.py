import io
import json
import sys
from pathlib import Path

import pytest

FIXTURES = Path(__file__).resolve().parent / "fixtures"


def _expected(name):
    return (FIXTURES / name).read_text(encoding="utf-8")


@pytest.mark.parametrize(
    "argv",
    [
        ("monomials",),
        ("agraded", "--identity"),
    ],
)
def test_circle_golden_output(run_cli, fixture_path, argv):
    code, out, err = run_cli(*argv, "--input", fixture_path("circle_xy.txt"))
    assert code == 0
    assert out == _expected("circle_xy.expected")
    assert err == ""


def test_output_is_byte_identical_across_runs(run_cli, fixture_path):
    first = run_cli("monomials", "--input", fixture_path("circle_xy.txt"))
    second = run_cli("monomials", "--input", fixture_path("circle_xy.txt"))
    assert first == second


@pytest.mark.parametrize(
    "argv, fixture, expected",
    [
        (("has-monomial",), "xplusy.txt", "false\n"),
        (("has-monomial",), "circle_xy.txt", "true\n"),
        (("has-monomial",), "principal_x.txt", "true\n"),
        (("monomials",), "xplusy.txt", "0\n"),
        (("monomials",), "principal_x.txt", "x\n"),
        (("agraded", "--identity"), "principal_x.txt", "x\n"),
        (("agraded", "--zero"), "circle_xy.txt", "x*y\nx^2 + y^2\ny^3\n"),
        (("agraded",), "weighted.txt", "x^2 + y\n"),
        (("agraded", "--total-degree"), "weighted.txt", "0\n"),
        (("is-graded",), "weighted.txt", "true\n"),
        (("is-graded", "--identity"), "weighted.txt", "false\n"),
        (("monomials", "--order", "lex"), "circle_xy.txt", "y^3\nx*y\nx^3\n"),
        (("monomials", "--up-to", "3"), "circle_xy.txt", "x*y\ny^3\nx*y^2\nx^2*y\nx^3\n"),
        (("monomials", "--up-to", "8"), "xplusy.txt", ""),
    ],
)
def test_subcommands(run_cli, fixture_path, argv, fixture, expected):
    code, out, _ = run_cli(*argv, "--input", fixture_path(fixture))
    assert code == 0
    assert out == expected


def test_verify_passes_on_the_computed_subideal(run_cli, fixture_path):
    code, out, _ = run_cli("verify", "--input", fixture_path("circle_xy.txt"), "--degree", "6")
    assert code == 0
    assert out == "pass\n"


def test_verify_fails_with_witness(run_cli, fixture_path):
    code, out, err = run_cli(
        "verify",
        "--input",
        fixture_path("circle_xy.txt"),
        "--candidate",
        fixture_path("candidate_xy.txt"),
        "--degree",
        "4",
    )
    assert code == 1
    assert out == "fail\nx^3\n"
    assert "missing from the candidate" in err


def test_verify_rejects_candidate_over_another_ring(run_cli, fixture_path):
    code, out, err = run_cli(
        "verify", "--input", fixture_path("weighted.txt"), "--candidate", fixture_path("candidate_xy.txt")
    )
    assert code == 2
    assert out == ""
    assert "error" in err


@pytest.mark.parametrize(
    "fixture, position, fragment",
    [
        ("bad_variable.txt", "line 3, column 12", "unknown variable 'z'"),
        ("bad_exponent.txt", "line 2, column 7", "malformed exponent"),
        ("bad_modulus.txt", "line 2, column 10", "non-prime modulus"),
        ("bad_grading.txt", "line 4, column 1", "matrix shape mismatch"),
    ],
)
def test_parse_errors_exit_with_usage_code(run_cli, fixture_path, fixture, position, fragment):
    code, out, err = run_cli("monomials", "--input", fixture_path(fixture))
    assert code == 2
    assert out == ""
    assert f"{fixture_path(fixture)}: {position}: " in err
    assert fragment in err


@pytest.mark.parametrize(
    "argv",
    [
        (),
        ("frobnicate",),
        ("agraded", "--identity", "--zero"),
        ("monomials", "--order", "deglex"),
        ("monomials", "--up-to", "-1"),
        ("verify", "--degree", "many"),
    ],
)
def test_usage_errors(run_cli, argv):
    code, out, err = run_cli(*argv)
    assert code == 2
    assert out == ""
    assert "usage:" in err


def test_agraded_without_grading_is_a_usage_error(run_cli, fixture_path):
    code, _, err = run_cli("agraded", "--input", fixture_path("circle_xy.txt"))
    assert code == 2
    assert "no grading" in err


def test_missing_input_file(run_cli, tmp_path):
    code, _, err = run_cli("monomials", "--input", str(tmp_path / "absent.txt"))
    assert code == 2
    assert "absent.txt" in err


def test_reads_standard_input(run_cli, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("vars x y\npoly x^2 + y^2\npoly x*y\n"))
    code, out, _ = run_cli("monomials")
    assert code == 0
    assert out == _expected("circle_xy.expected")


def test_stdin_errors_name_the_stream(run_cli, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("vars x\npoly y\n"))
    code, _, err = run_cli("has-monomial")
    assert code == 2
    assert err.startswith("<stdin>: line 2, column 6: ")


def test_output_file(run_cli, fixture_path, tmp_path):
    target = tmp_path / "result.txt"
    code, out, _ = run_cli("monomials", "--input", fixture_path("circle_xy.txt"), "--output", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text(encoding="utf-8") == _expected("circle_xy.expected")


def test_report_goes_to_standard_error(run_cli, fixture_path):
    code, out, err = run_cli("monomials", "--input", fixture_path("circle_xy.txt"), "--report")
    assert code == 0
    assert out == _expected("circle_xy.expected")
    report = json.loads(err)
    assert report["operation"] == "largest_monomial_subideal"
    assert report["field"] == "QQ"
    assert report["grading_shape"] == [2, 2]
    assert [stage["name"] for stage in report["stages"]][-1] == "reduced_basis"
    assert report["output_generators"] == 3


def test_verbose_logs_pipeline_stages_as_json(run_cli, fixture_path):
    code, out, err = run_cli("monomials", "-v", "--input", fixture_path("circle_xy.txt"))
    assert code == 0
    assert out == _expected("circle_xy.expected")
    events = [json.loads(line) for line in err.splitlines()]
    assert "pipeline_stage" in {event["event"] for event in events}
    assert all(event["level"] == "info" for event in events)


def test_candidate_syntax_errors_name_the_candidate_file(run_cli, fixture_path):
    candidate = fixture_path("bad_candidate.txt")
    code, out, err = run_cli("verify", "--input", fixture_path("circle_xy.txt"), "--candidate", candidate)
    assert code == 2
    assert out == ""
    assert err.startswith(f"{candidate}: line 3, column 8: ")
    assert "unknown variable 'z'" in err


def test_grading_entries_beyond_machine_integers(run_cli, fixture_path):
    code, out, _ = run_cli("is-graded", "--input", fixture_path("huge_grading.txt"))
    assert code == 0
    assert out == "false\n"

    code, out, err = run_cli("agraded", "--input", fixture_path("huge_grading.txt"))
    assert code == 2
    assert out == ""
    assert "exceeds" in err
