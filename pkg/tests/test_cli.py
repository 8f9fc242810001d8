"""Command-line interface: output shapes, determinism, exit codes."""

import json
import subprocess
import sys

import pytest

from riordanlbp.cli import GENERATE_KINDS, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGenerate:
    def test_unit_moments(self, capsys):
        code, out, err = run_cli(
            capsys, "generate", "moments", "--b", "1", "--c", "1", "--order", "9"
        )
        assert code == 0
        assert err == ""
        assert out.splitlines() == [
            "1", "1", "2", "6", "22", "90", "394", "1806", "8558", "41586"
        ]

    def test_symbolic_production_block(self, capsys):
        code, out, _ = run_cli(capsys, "generate", "production", "--order", "3")
        assert code == 0
        rows = out.splitlines()
        assert rows[0] == "c,1,0,0"
        assert rows[1] == "b*c,c + b,1,0"
        assert rows[2] == "b^2*c,b*c + b^2,c + b,1"

    def test_lbp_coeffs_with_negative_parameter(self, capsys):
        code, out, _ = run_cli(
            capsys, "generate", "lbp-coeffs", "--b", "3/2", "--c=-1/3", "--order", "3"
        )
        assert code == 0
        assert out.splitlines() == [
            "1",
            "1/3,1",
            "1/9,-5/6,1",
            "1/27,-2/3,-2,1",
        ]

    def test_hankel_match_closed_form(self, capsys):
        code, out, _ = run_cli(
            capsys, "generate", "hankel", "--b", "1", "--c", "1", "--order", "5"
        )
        assert code == 0
        assert out.splitlines() == ["1", "1", "2", "8", "64", "1024"]

    def test_toeplitz_two_rows(self, capsys):
        code, out, _ = run_cli(
            capsys, "generate", "toeplitz", "--b", "1", "--c", "1", "--order", "4"
        )
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 2
        assert lines[0] == "1,-1,-1,1,1"
        assert lines[1] == "1,-1,-1,1,1"

    @pytest.mark.parametrize("shape", ["s", "j", "t"])
    def test_cfrac_shapes(self, capsys, shape):
        code, out, _ = run_cli(
            capsys, "generate", "cfrac-expand", "--b", "1", "--c", "1",
            "--order", "6", "--shape", shape,
        )
        assert code == 0
        values = out.splitlines()
        if shape == "t":
            assert values == ["1", "2", "6", "22", "90", "394", "1806"]
        else:
            assert values == ["1", "1", "2", "6", "22", "90", "394"]

    @pytest.mark.parametrize("route", ["catalan_sum", "lagrange", "gf_expansion"])
    def test_moment_routes_agree(self, capsys, route):
        base = run_cli(
            capsys, "generate", "moments", "--b", "2", "--c", "1/2", "--order", "8"
        )
        alt = run_cli(
            capsys, "generate", "moments", "--b", "2", "--c", "1/2",
            "--order", "8", "--route", route,
        )
        assert base[0] == alt[0] == 0
        assert base[1] == alt[1]

    @pytest.mark.parametrize("kind", GENERATE_KINDS)
    def test_every_kind_is_deterministic(self, capsys, kind):
        args = ("generate", kind, "--b", "1", "--c", "2", "--order", "4")
        first = run_cli(capsys, *args)
        second = run_cli(capsys, *args)
        assert first == second
        assert first[0] == 0

    def test_json_payload_shape(self, capsys):
        code, out, _ = run_cli(
            capsys, "generate", "moments", "--b", "1", "--c", "1",
            "--order", "4", "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload == {
            "kind": "moments",
            "params": {"b": "1", "c": "1"},
            "order": 4,
            "data": ["1", "1", "2", "6", "22"],
        }

    def test_symbolic_json_round_trips(self, capsys):
        code, out, _ = run_cli(
            capsys, "generate", "moments", "--order", "3", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["params"] == {"b": "sym", "c": "sym"}
        assert payload["data"][2] == "c^2 + b*c"


class TestVerify:
    def test_all_scenarios_pass(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "all", "--order", "8")
        assert code == 0
        assert "FAIL" not in out
        assert out.count("scenario ") >= 8

    def test_single_scenario_json(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "factorizations", "--order", "8", "--format", "json"
        )
        assert code == 0
        reports = json.loads(out)
        assert len(reports) == 1
        assert reports[0]["passed"] is True
        assert reports[0]["checks"]


class TestOeisCheck:
    def test_all(self, capsys):
        code, out, _ = run_cli(capsys, "oeis-check", "all")
        assert code == 0
        lines = [l for l in out.splitlines() if l]
        assert len(lines) == 5
        assert all(l.startswith("PASS") for l in lines)

    def test_single(self, capsys):
        code, out, _ = run_cli(capsys, "oeis-check", "A006318")
        assert code == 0
        assert "A006318" in out

    def test_corrupt_fixture_fails(self, capsys, tmp_path):
        (tmp_path / "A000108.txt").write_text("0 1\n1 1\n2 2\n3 5\n4 999\n")
        code, out, _ = run_cli(
            capsys, "oeis-check", "A000108", "--fixtures", str(tmp_path)
        )
        assert code == 1
        assert "FAIL" in out


class TestErrorHandling:
    def test_zero_b_is_parameter_error(self, capsys):
        code, _, err = run_cli(
            capsys, "generate", "moments", "--b", "0", "--c", "1"
        )
        assert code == 2
        assert err.strip()

    def test_non_rational_parameter(self, capsys):
        code, _, err = run_cli(
            capsys, "generate", "moments", "--b", "x", "--c", "1"
        )
        assert code == 2
        assert "rational" in err

    def test_unknown_scenario(self):
        # rejected by the argument parser itself
        with pytest.raises(SystemExit) as exc:
            main(["verify", "nonesuch"])
        assert exc.value.code == 2

    def test_unknown_sequence(self, capsys):
        code, _, err = run_cli(capsys, "oeis-check", "A999999")
        assert code == 2

    def test_usage_error_from_argparse(self):
        with pytest.raises(SystemExit) as exc:
            main(["generate", "nonesuch-kind"])
        assert exc.value.code == 2

    def test_missing_subcommand(self):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2


class TestConsoleScript:
    def test_module_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "riordanlbp", "generate", "moments",
             "--b", "1", "--c", "1", "--order", "3"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout.splitlines() == ["1", "1", "2", "6"]
