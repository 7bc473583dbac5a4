"""Command-line interface: golden outputs, JSON round trips, error handling."""

import json
import subprocess
import sys

import pytest

from genuscalc.cli import run


def _invoke(capsys, argv):
    status = run(argv)
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def test_coeff_text_output(capsys):
    status, out, err = _invoke(capsys, ["coeff", "--series", "L", "--weight", "4"])
    assert status == 0 and err == ""
    assert out == "z^0: 1\nz^1: 1/3\nz^2: -1/45\nz^3: 2/945\nz^4: -1/4725\n"


def test_coeff_ahat_text_output(capsys):
    status, out, err = _invoke(capsys, ["coeff", "--series", "Ahat", "--weight", "3"])
    assert status == 0
    assert out == "z^0: 1\nz^1: -1/24\nz^2: 7/5760\nz^3: -31/967680\n"


def test_genus_text_output_matches_displayed_expansions(capsys):
    status, out, err = _invoke(capsys, ["genus", "--series", "L", "--weight", "3"])
    assert status == 0
    assert out == (
        "K_1 = p1/3\n"
        "K_2 = (7*p2 - p1^2)/45\n"
        "K_3 = (62*p3 - 13*p2*p1 + 2*p1^3)/945\n"
    )
    status, out, err = _invoke(capsys, ["genus", "--series", "Ahat", "--weight", "3"])
    assert status == 0
    assert out == (
        "K_1 = -p1/24\n"
        "K_2 = (-4*p2 + 7*p1^2)/5760\n"
        "K_3 = (-16*p3 + 44*p2*p1 - 31*p1^3)/967680\n"
    )


def test_genus_json_payload(capsys):
    status, out, err = _invoke(
        capsys, ["genus", "--series", "L", "--weight", "2", "--format", "json"]
    )
    assert status == 0
    payload = json.loads(out)
    assert payload["series"] == "L"
    assert payload["polys"][0] == {
        "weight": 1,
        "text": "p1/3",
        "terms": [{"partition": [1], "coefficient": "1/3"}],
    }
    assert payload["polys"][1]["terms"] == [
        {"partition": [2], "coefficient": "7/45"},
        {"partition": [1, 1], "coefficient": "-1/45"},
    ]


def test_manifold_text_output(capsys):
    status, out, err = _invoke(capsys, ["manifold", "--descriptor", "hp:2"])
    assert status == 0
    assert out == (
        "manifold: HP2\n"
        "dimension: 8\n"
        "pontryagin: 1 + 2*z + 7*z^2\n"
        "signature: 1\n"
        "ahat: 0\n"
    )


def test_manifold_report_selection(capsys):
    status, out, err = _invoke(
        capsys, ["manifold", "--descriptor", "product:s:4,hp:2", "--report", "signature"]
    )
    assert status == 0
    assert out == "manifold: S4 x HP2\ndimension: 12\nsignature: 0\n"


def test_pontryagin_text_output(capsys):
    status, out, err = _invoke(
        capsys,
        ["pontryagin", "--n", "2", "--A", "1", "--B", "1", "--C", "1"],
    )
    assert status == 0
    assert out.endswith(
        "ph: u + u*z + u*z^2\n"
        "p: 1 + u - 6*u*z + 120*u*z^2\n"
        "p_1: u\n"
        "p_2: -6*u*z\n"
        "p_3: 120*u*z^2\n"
    )


def test_surgery_text_output(capsys):
    status, out, err = _invoke(
        capsys,
        ["surgery", "--n", "2", "--B", "496/63", "--C", "28/45"],
    )
    assert status == 0
    assert out == (
        "n: 2\n"
        "A: 0\n"
        "B: 496/63\n"
        "C: 28/45\n"
        "lambda: 1\n"
        "sigma: 0\n"
        "a_hat: 1/252\n"
        "p1_cubed: 0\n"
    )


def test_surgery_json_schema(capsys):
    status, out, err = _invoke(
        capsys,
        ["surgery", "--n", "2", "--A", "1", "--lambda", "1/2", "--format", "json"],
    )
    assert status == 0
    payload = json.loads(out)
    assert payload == {
        "n": 2,
        "params": {"A": "1", "B": "0", "C": "0", "lambda": "1/2"},
        "sigma": "-1/48",
        "a_hat": "0",
        "p1_cubed": "-6",
    }


def test_solve_bundle_section_json(capsys):
    status, out, err = _invoke(
        capsys, ["solve-bundle", "--n", "2", "--require-section", "--format", "json"]
    )
    assert status == 0
    payload = json.loads(out)
    assert payload == {
        "n": 2,
        "params": {"A": "0", "B": "496/63", "C": "28/45", "lambda": "1"},
        "sigma": "0",
        "a_hat": "1/252",
        "p1_cubed": "0",
        "kernel_basis": [["28", "15", "0"], ["496", "0", "-21"]],
    }


def test_solve_bundle_text_output(capsys):
    status, out, err = _invoke(capsys, ["solve-bundle", "--n", "2"])
    assert status == 0
    assert out == (
        "n: 2\n"
        "A: 28\n"
        "B: 15\n"
        "C: 0\n"
        "lambda: 1\n"
        "sigma: 0\n"
        "a_hat: 1/192\n"
        "p1_cubed: -336\n"
        "kernel_basis: [28, 15, 0]; [496, 0, -21]\n"
    )


def test_solve_bundle_pair_mode_json(capsys):
    status, out, err = _invoke(
        capsys, ["solve-bundle", "--n", "4", "--format", "json"]
    )
    assert status == 0
    payload = json.loads(out)
    assert payload["n"] == 4
    assert payload["params"]["B"] == "0"
    assert payload["sigma"] == "0"
    assert payload["a_hat"] != "0"
    assert payload["p1_cubed"] is None
    assert len(payload["kernel_basis"]) == 1


def test_json_output_round_trips_byte_for_byte(capsys):
    for argv in (
        ["coeff", "--series", "L", "--weight", "3", "--format", "json"],
        ["genus", "--series", "Ahat", "--weight", "3", "--format", "json"],
        ["manifold", "--descriptor", "hp:3", "--format", "json"],
        ["surgery", "--n", "2", "--B", "1", "--format", "json"],
        ["solve-bundle", "--n", "2", "--require-section", "--format", "json"],
    ):
        status, out, err = _invoke(capsys, argv)
        assert status == 0
        assert json.dumps(json.loads(out), indent=2) + "\n" == out


def test_repeat_runs_are_byte_identical(capsys):
    argv = ["solve-bundle", "--n", "2", "--require-section", "--format", "json"]
    _, first, _ = _invoke(capsys, argv)
    _, second, _ = _invoke(capsys, argv)
    assert first == second


@pytest.mark.parametrize(
    "argv",
    [
        ["frobnicate"],
        ["coeff", "--series", "L"],
        ["coeff", "--series", "X", "--weight", "3"],
        ["coeff", "--series", "L", "--weight", "-1"],
        ["surgery", "--n", "2", "--A", "1.5"],
        ["surgery", "--n", "2", "--A", "1/0"],
        ["surgery", "--n", "1", "--A", "1"],
        ["surgery", "--n", "3", "--B", "1"],
        ["surgery", "--n", "2", "--lambda", "0"],
        ["manifold", "--descriptor", "made:up"],
        ["manifold", "--descriptor", "hp:2", "--report", "volume"],
        ["manifold", "--descriptor", "hp:2", "--unknown-flag"],
        ["solve-bundle", "--n", "3"],
        ["solve-bundle", "--n", "4", "--require-section"],
        [],
    ],
)
def test_errors_exit_nonzero_with_one_diagnostic_line(capsys, argv):
    status, out, err = _invoke(capsys, argv)
    assert status != 0
    assert out == ""
    assert err.count("\n") == 1 and err.endswith("\n")
    assert err.startswith("genuscalc: error: ")


def test_help_exits_zero(capsys):
    status, out, err = _invoke(capsys, ["--help"])
    assert status == 0
    assert "coeff" in out and "solve-bundle" in out


def test_module_entry_point_runs_in_a_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "genuscalc", "genus", "--series", "L", "--weight", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "K_1 = p1/3\nK_2 = (7*p2 - p1^2)/45\n"
    assert proc.stderr == ""
