"""Command-line interface: payloads, formats, exit codes, determinism."""

import json
import subprocess
import sys

import pytest

from polyweight import kernel_backend_name
from polyweight.cli import (
    EXIT_DOMAIN,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_PRECONDITION,
    main,
)


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, argv):
    code, out, err = run(capsys, argv)
    assert code == EXIT_OK, err
    assert err == ""
    return json.loads(out)


class TestClassify:
    def test_known_weight(self, capsys):
        payload = run_json(
            capsys,
            ["classify", "--group", "gl:2", "--p", "2", "--r", "1",
             "--weight", "3,1"],
        )
        assert payload["command"] == "classify"
        assert payload["group"] == "gl:2"
        assert payload["backend"] == kernel_backend_name
        assert payload["kernel_basis"] == []
        assert payload["p"] == 2 and payload["r"] == 1
        result = payload["result"]
        assert result == {
            "weight": [3, 1],
            "phi": [1],
            "is_polynomial": True,
            "is_restricted": False,
            "in_Pr": False,
            "is_simple_polynomial": True,
            "lambda0": [1, 1],
            "lambda_tilde": [1, 0],
            "note": "",
        }

    def test_negative_coordinates_use_equals_syntax(self, capsys):
        payload = run_json(
            capsys,
            ["classify", "--group", "gl:2", "--p", "2", "--r", "1",
             "--weight=-1,2"],
        )
        assert payload["result"]["weight"] == [-1, 2]
        assert payload["result"]["is_polynomial"] is False

    def test_undecomposable_class_reports_note(self, capsys):
        payload = run_json(
            capsys,
            ["classify", "--group", "go:5", "--p", "2", "--r", "1",
             "--weight", "0,1,0,0,0"],
        )
        result = payload["result"]
        assert result["lambda0"] is None
        assert result["lambda_tilde"] is None
        assert result["is_simple_polynomial"] is False
        assert result["note"] != ""


class TestDecompose:
    def test_split_with_functional_values(self, capsys):
        payload = run_json(
            capsys,
            ["decompose", "--group", "gl:2", "--p", "2", "--r", "1",
             "--weight", "3,1"],
        )
        assert payload["result"] == {
            "weight": [3, 1],
            "lambda0": [1, 1],
            "lambda_tilde": [1, 0],
            "phi_lambda0": [1],
            "phi_lambda_tilde": [0],
        }

    def test_unavailable_is_a_precondition_failure(self, capsys):
        code, out, err = run(
            capsys,
            ["decompose", "--group", "go:5", "--p", "2", "--r", "1",
             "--weight", "0,1,0,0,0"],
        )
        assert code == EXIT_PRECONDITION
        assert out == ""
        assert err.startswith("error:")


class TestEnumerate:
    def test_small_general_linear(self, capsys):
        payload = run_json(
            capsys,
            ["enumerate-pr", "--group", "gl:2", "--p", "2", "--r", "1"],
        )
        assert payload["result"]["count"] == 4
        assert payload["result"]["elements"] == [
            [0, 0], [1, 0], [1, 1], [2, 1],
        ]


class TestValidate:
    def test_good_datum(self, capsys):
        payload = run_json(capsys, ["validate", "--group", "gsp:4"])
        result = payload["result"]
        assert result["all_ok"] is True
        assert all(result[key] for key in ("a", "b", "c_lower", "c_upper", "d"))
        assert result["witnesses"] == []

    def test_even_orthogonal_fails_one_hypothesis(self, capsys):
        payload = run_json(capsys, ["validate", "--group", "go:8"])
        result = payload["result"]
        assert result["all_ok"] is False
        assert result["c_lower"] is False
        assert result["a"] and result["b"] and result["c_upper"] and result["d"]
        assert result["witnesses"]
        assert all(w.startswith("(c-lower)") for w in result["witnesses"])


class TestAssumptionCheck:
    def test_small_run(self, capsys):
        payload = run_json(
            capsys,
            ["assumption-check", "--group", "gl:2", "--p", "2", "--r", "1",
             "--box-radius", "2"],
        )
        result = payload["result"]
        assert result["box_radius"] == 2
        assert result["all_ok"] is True
        names = [prop["name"] for prop in result["properties"]]
        assert names == [
            "positivity", "homogeneity", "additivity_witness", "x0_bijection",
        ]
        assert all(prop["ok"] for prop in result["properties"])


class TestCounterexample:
    def test_prime_power_five(self, capsys):
        payload = run_json(capsys, ["counterexample", "--prpower", "5"])
        assert "group" not in payload
        assert payload["result"] == {
            "prpow": 5,
            "lambda0": [2, 2, 2, 2, 1, 1, 1, 1],
            "lambda_tilde": [0, 0, 0, 0, 1, 1, -1, 1],
            "phi_lambda0": [4],
            "phi_lambda0_shifted": [-1],
            "phi_lambda_tilde": [-1],
            "witness": None,
            "weyl_order": 192,
        }

    def test_residue_gate(self, capsys):
        code, out, err = run(capsys, ["counterexample", "--prpower", "7"])
        assert code == EXIT_PRECONDITION
        assert "error:" in err


class TestOrbitShift:
    def test_admissible_shift(self, capsys):
        payload = run_json(
            capsys,
            ["orbit-shift", "--group", "gl:2", "--p", "2", "--r", "1",
             "--weight", "1,0", "--shift-i", "1", "--box-radius", "4"],
        )
        assert payload["result"] == {
            "weight": [1, 0],
            "shift_i": 1,
            "box_radius": 4,
            "shift_bound": 0,
            "ok": True,
            "counterexample": None,
            "orbit_size": 4,
        }

    def test_out_of_range_shift(self, capsys):
        code, _, err = run(
            capsys,
            ["orbit-shift", "--group", "gl:2", "--p", "2", "--r", "1",
             "--weight", "1,0", "--shift-i", "5", "--box-radius", "4"],
        )
        assert code == EXIT_PRECONDITION
        assert "error:" in err

    def test_rank_two_distinguished_part_rejected(self, capsys):
        code, _, err = run(
            capsys,
            ["orbit-shift", "--group", "levi:2,3", "--p", "2", "--r", "1",
             "--weight", "1,0,0,0,0", "--shift-i", "0", "--box-radius", "3"],
        )
        assert code == EXIT_DOMAIN
        assert "error:" in err


class TestExitCodes:
    @pytest.mark.parametrize(
        "argv",
        [
            ["classify", "--group", "foo:3", "--p", "2", "--r", "1",
             "--weight", "1,0,0"],
            ["classify", "--group", "gl:2", "--p", "4", "--r", "1",
             "--weight", "1,0"],
            ["classify", "--group", "gl:2", "--p", "2", "--r", "0",
             "--weight", "1,0"],
            ["classify", "--group", "gl:2", "--p", "2", "--r", "1",
             "--weight", "1,0,0"],
            ["classify", "--group", "gl:2", "--p", "2", "--r", "1",
             "--weight", "a,b"],
            ["counterexample", "--prpower", "6"],
            ["counterexample", "--prpower", "1"],
            ["orbit-shift", "--group", "gl:2", "--p", "2", "--r", "1",
             "--weight", "1,0", "--shift-i", "-1", "--box-radius", "4"],
        ],
        ids=[
            "unknown-family", "composite-p", "zero-exponent", "wrong-length",
            "non-integer-weight", "composite-prpower", "unit-prpower",
            "negative-shift",
        ],
    )
    def test_malformed_requests(self, capsys, argv):
        code, out, err = run(capsys, argv)
        assert code == EXIT_PARSE
        assert out == ""
        assert err.startswith("error:")

    def test_even_orthogonal_context_is_a_domain_error(self, capsys):
        code, _, err = run(
            capsys,
            ["classify", "--group", "go:8", "--p", "5", "--r", "1",
             "--weight", "0,0,0,0,0,0,0,0"],
        )
        assert code == EXIT_DOMAIN
        assert "error:" in err

    def test_missing_subcommand_exits_via_argparse(self, capsys):
        with pytest.raises(SystemExit) as err:
            main([])
        assert err.value.code == 2

    def test_version_flag(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["--version"])
        assert err.value.code == 0
        assert "polyweight" in capsys.readouterr().out


class TestFormats:
    def test_tsv_enumeration_is_one_row_per_element(self, capsys):
        code, out, err = run(
            capsys,
            ["--format", "tsv", "enumerate-pr", "--group", "gl:1",
             "--p", "3", "--r", "1"],
        )
        assert code == EXIT_OK
        assert out == "0\n1\n2\n"

    def test_tsv_classify_is_sorted_key_value(self, capsys):
        code, out, _ = run(
            capsys,
            ["--format", "tsv", "classify", "--group", "gl:2", "--p", "2",
             "--r", "1", "--weight", "3,1"],
        )
        assert code == EXIT_OK
        lines = out.splitlines()
        keys = [line.split("\t")[0] for line in lines]
        assert keys == sorted(keys)
        table = dict(line.split("\t") for line in lines)
        assert table["weight"] == "3,1"
        assert table["phi"] == "1"
        assert table["in_Pr"] == "false"
        assert table["lambda0"] == "1,1"

    def test_tsv_renders_none_and_properties(self, capsys):
        code, out, _ = run(
            capsys,
            ["--format", "tsv", "classify", "--group", "go:5", "--p", "2",
             "--r", "1", "--weight", "0,1,0,0,0"],
        )
        assert code == EXIT_OK
        table = dict(line.split("\t", 1) for line in out.splitlines())
        assert table["lambda0"] == "none"
        code, out, _ = run(
            capsys,
            ["--format", "tsv", "assumption-check", "--group", "gl:2",
             "--p", "2", "--r", "1", "--box-radius", "2"],
        )
        assert code == EXIT_OK
        lines = out.splitlines()
        assert lines[0].split("\t")[0] == "positivity"
        assert lines[-1] == "all_ok\ttrue"

    def test_format_environment_default(self, capsys, monkeypatch):
        monkeypatch.setenv("POLYWEIGHT_FORMAT", "tsv")
        code, out, _ = run(
            capsys,
            ["enumerate-pr", "--group", "gl:1", "--p", "3", "--r", "1"],
        )
        assert code == EXIT_OK
        assert out == "0\n1\n2\n"

    def test_explicit_format_beats_environment(self, capsys, monkeypatch):
        monkeypatch.setenv("POLYWEIGHT_FORMAT", "tsv")
        payload = run_json(
            capsys,
            ["--format", "json", "enumerate-pr", "--group", "gl:1",
             "--p", "3", "--r", "1"],
        )
        assert payload["result"]["count"] == 3


class TestDeterminism:
    @pytest.mark.parametrize(
        "argv",
        [
            ["classify", "--group", "gsp:4", "--p", "3", "--r", "1",
             "--weight", "1,2,0,1"],
            ["enumerate-pr", "--group", "gl:2", "--p", "2", "--r", "1"],
            ["--format", "tsv", "validate", "--group", "go:5"],
        ],
        ids=["classify", "enumerate", "validate-tsv"],
    )
    def test_repeated_requests_are_byte_identical(self, capsys, argv):
        first = run(capsys, argv)
        second = run(capsys, argv)
        assert first == second
        assert first[0] == EXIT_OK


class TestEntryPoints:
    def test_module_execution(self):
        proc = subprocess.run(
            [sys.executable, "-m", "polyweight", "classify", "--group",
             "gl:2", "--p", "2", "--r", "1", "--weight", "3,1"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == EXIT_OK
        assert json.loads(proc.stdout)["result"]["phi"] == [1]

    def test_module_execution_error_path(self):
        proc = subprocess.run(
            [sys.executable, "-m", "polyweight", "classify", "--group",
             "gl:2", "--p", "9", "--r", "1", "--weight", "1,0"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == EXIT_PARSE
        assert proc.stdout == ""
