import json
import subprocess
import sys

import pytest

from permbinom.cli import EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, run


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGpoly:
    def test_alpha2_text(self, capsys):
        code, out, err = invoke(capsys, "gpoly", "--alpha", "2")
        assert code == EXIT_OK
        assert out == "2y^5+3y^4-23y^3-8y^2-9y+44\n"

    def test_alpha2_json(self, capsys):
        code, out, _ = invoke(capsys, "gpoly", "--alpha", "2", "--json")
        doc = json.loads(out)
        assert doc["status"] == "pass"
        assert doc["results"]["g"] == ["44", "-9", "-8", "-23", "3", "2"]
        assert doc["results"]["d_alpha"] == 2

    def test_bad_alpha_is_usage_error(self, capsys):
        code, out, err = invoke(capsys, "gpoly", "--alpha", "3")
        assert code == EXIT_USAGE and out == "" and "alpha" in err


class TestCheck:
    def test_q8_pp(self, capsys):
        code, out, _ = invoke(capsys, "check", "--q", "2^3", "--a", "7")
        assert code == EXIT_OK
        assert "agree = True" in out

    def test_json_verdict(self, capsys):
        code, out, _ = invoke(capsys, "check", "--q", "5", "--a", "3", "--json")
        doc = json.loads(out)
        assert doc["command"] == "check" and doc["status"] == "pass"
        assert doc["results"]["brute"] == doc["results"]["hermite"]

    def test_out_of_range_a(self, capsys):
        code, out, err = invoke(capsys, "check", "--q", "5", "--a", "0")
        assert code == EXIT_USAGE and "nonzero" in err


class TestVerify:
    def test_small_sweep(self, capsys):
        code, out, _ = invoke(capsys, "verify", "--max-q", "13", "--method", "both")
        assert code == EXIT_OK
        assert "0 disagreements" in out

    def test_json_counts(self, capsys):
        code, out, _ = invoke(capsys, "verify", "--max-q", "8", "--json")
        doc = json.loads(out)
        assert doc["results"]["pp_counts"] == {
            "2": 2, "3": 0, "4": 0, "5": 10, "7": 0, "8": 15
        }

    def test_verdict_stream(self, capsys):
        code, out, _ = invoke(capsys, "verify", "--max-q", "2", "--verdicts")
        lines = out.strip().splitlines()
        assert sum(1 for ln in lines if ln.startswith("{")) == 3  # a in {1,2,3}


class TestOtherSubcommands:
    def test_hermite_profile(self, capsys):
        code, out, _ = invoke(capsys, "hermite-profile", "--q", "5", "--a", "3")
        assert code == EXIT_OK
        assert "S(0)" in out and "verdict" in out

    def test_resultant_factored(self, capsys):
        code, out, _ = invoke(capsys, "resultant", "--left", "2", "--right", "5",
                              "--factor", "--json")
        doc = json.loads(out)
        assert doc["results"]["factorization"] == {
            "2": 5, "3": 35, "17": 2, "23": 1, "29": 1, "103": 1, "16069": 1
        }
        assert doc["results"]["complete"] is True

    def test_gcdchain_29(self, capsys):
        code, out, _ = invoke(capsys, "gcdchain", "--p", "29", "--json")
        doc = json.loads(out)
        assert doc["results"]["gcd"] == ["3", "1"]
        assert doc["results"]["evaluations"]["g_11(-3)"] == 0
        assert doc["results"]["evaluations"]["g_14(-3)"] == 15

    def test_sporadic_counts(self, capsys):
        for q, n in [(5, 10), (23, 8)]:
            code, out, _ = invoke(capsys, "sporadic", "--q", str(q), "--json")
            assert code == EXIT_OK
            assert json.loads(out)["results"]["count"] == n

    def test_sporadic_unsupported(self, capsys):
        code, _, err = invoke(capsys, "sporadic", "--q", "4")
        assert code == EXIT_USAGE

    def test_pipeline(self, capsys):
        code, out, _ = invoke(capsys, "pipeline", "--json")
        doc = json.loads(out)
        assert code == EXIT_OK
        assert doc["results"]["surviving_primes"] == [2, 17, 23, 29]
        assert doc["results"]["candidate_qs"] == [17, 23, 29]


class TestContract:
    def test_unknown_flag_is_usage_error(self, capsys):
        assert invoke(capsys, "gpoly", "--alpha", "2", "--frobnicate")[0] == EXIT_USAGE

    def test_missing_subcommand(self, capsys):
        assert invoke(capsys)[0] == EXIT_USAGE

    def test_json_is_deterministic(self, capsys):
        a = invoke(capsys, "verify", "--max-q", "8", "--json", "--seed", "1")[1]
        b = invoke(capsys, "verify", "--max-q", "8", "--json", "--seed", "1")[1]
        assert a == b

    def test_wall_time_on_stderr_not_stdout(self, capsys):
        _, out, err = invoke(capsys, "gpoly", "--alpha", "2", "--json")
        assert "s]" in err and "s]" not in out

    def test_console_script_subprocess(self):
        proc = subprocess.run(
            [sys.executable, "-m", "permbinom.cli", "check", "--q", "2", "--a", "2"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        assert "agree = True" in proc.stdout

    def test_entry_point_installed(self):
        proc = subprocess.run(["permbinom", "gpoly", "--alpha", "2"],
                              capture_output=True, text=True)
        assert proc.returncode == 0
        assert proc.stdout.strip() == "2y^5+3y^4-23y^3-8y^2-9y+44"
