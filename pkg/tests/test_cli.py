"""End-to-end command-line tests driven through real subprocesses."""

import subprocess
import sys

import pytest

PY = [sys.executable, "-m", "turancover"]


def run(args, stdin_text=""):
    proc = subprocess.run(
        PY + args, input=stdin_text, capture_output=True, text=True, timeout=300
    )
    return proc.returncode, proc.stdout, proc.stderr


def chain(*commands):
    """Feed each command's stdout into the next one's stdin."""
    text = ""
    code = 0
    for cmd in commands:
        code, text, err = run(cmd, text)
        assert code == 0, f"{cmd} failed: {err}"
    return text


def test_blow_up_cover_number_pipeline():
    out = chain(
        ["gen", "complete", "--n", "4", "--t", "3"],
        ["blowup", "--k", "2"],
        ["oracle", "tau"],
    )
    assert out == "2\n"


def test_round_then_verify_pipeline():
    out = chain(
        ["gen", "complete", "--n", "4", "--t", "3"],
        ["blowup", "--k", "2"],
        ["round", "ahtp", "--seed", "7", "--trials", "20", "--mode", "exact"],
        ["verify", "cover"],
    )
    assert out == "OK\n"


def test_lines_have_no_tents():
    out = chain(["gen", "lines", "--n", "2"], ["oracle", "tents"])
    assert out == "TENTS 0\n"


def test_exact_lp_output():
    out = chain(
        ["gen", "complete", "--n", "4", "--t", "3"],
        ["lp", "vc", "--mode", "exact"],
    )
    assert out == "0 1/3\n1 1/3\n2 1/3\n3 1/3\nOBJ 4/3\n"


def test_float_lp_objective_close_to_exact():
    out = chain(
        ["gen", "complete", "--n", "4", "--t", "3"],
        ["lp", "matching", "--mode", "float"],
    )
    obj = float(out.strip().splitlines()[-1].split()[1])
    assert abs(obj - 4 / 3) < 1e-6


def test_taustar_rho_alpha_oracles():
    k4 = ["gen", "complete", "--n", "4", "--t", "3"]
    assert chain(k4, ["oracle", "taustar"]) == "4/3\n"
    assert chain(k4, ["oracle", "rho"]) == "3/1\n"
    assert chain(k4, ["oracle", "alpha"]) == "2\n"
    assert chain(k4, ["oracle", "nu"]) == "1\n"


def test_tent_witness_listing():
    tent = "HG 3 7 4\n0 1 4\n0 2 5\n0 3 6\n4 5 6\n"
    code, out, _ = run(["oracle", "tents"], tent)
    assert code == 0
    assert out == "TENTS 1\n0 1 2 3\n"


def test_threshold_round_echoes_instance():
    out = chain(
        ["gen", "complete", "--n", "4", "--t", "3"],
        ["blowup", "--k", "2"],
        ["round", "threshold", "--mode", "exact"],
    )
    assert out.startswith("HG 3 6 4\n")
    assert "COVER 2\n" in out
    assert "SEED - TRIAL -" in out


def test_t2_round_verifies():
    out = chain(
        ["gen", "complete", "--n", "4", "--t", "3"],
        ["blowup", "--k", "2"],
        ["round", "t2", "--seed", "11", "--trials", "5", "--mode", "exact"],
        ["verify", "cover"],
    )
    assert out == "OK\n"


def test_colorcode_round_verifies():
    out = chain(
        ["gen", "complete", "--n", "5", "--t", "4"],
        ["blowup", "--k", "3"],
        ["round", "colorcode", "--seed", "3"],
        ["verify", "cover"],
    )
    assert out == "OK\n"


def test_greedy_trace_output():
    out = chain(["gen", "hard-setcover", "--k", "3"], ["setcover", "greedy"])
    rows = [line.split() for line in out.strip().splitlines()]
    assert all(len(r) == 3 for r in rows)
    assert rows[-1][2] == "0"
    assert len(rows) >= 5


def test_verify_simple_both_ways():
    code, out, _ = run(["verify", "simple"], "SS 4 2\n2 0 1\n2 2 3\n")
    assert (code, out) == (0, "OK\n")
    code, out, err = run(
        ["verify", "simple"], "HG 3 4 2\n0 1 2\n0 1 3\n"
    )
    assert code == 5
    assert "not simple" in err


def test_verify_matching():
    ok = "HG 3 6 2\n0 1 2\n3 4 5\nMATCHING 2\n0\n1\n"
    assert run(["verify", "matching"], ok)[:2] == (0, "OK\n")
    bad = "HG 3 5 2\n0 1 2\n0 3 4\nMATCHING 2\n0\n1\n"
    code, _, err = run(["verify", "matching"], bad)
    assert code == 5 and "reuses" in err


def test_verify_cover_failure_exit_code():
    doc = (
        "HG 3 4 1\n0 1 2\n"
        "COVER 1\n3\n"
        "BREAKDOWN U=3 SPRIME= PARITY=\n"
        "LP OPT=- RESIDUAL=-\n"
        "SEED - TRIAL -\n"
    )
    code, _, err = run(["verify", "cover"], doc)
    assert code == 5
    assert "cover" in err


def test_parse_error_exit_code():
    code, _, err = run(["oracle", "tau"], "HG 3 4 2\n0 1 2\n0 1 2\n")
    assert code == 2
    assert "line 3" in err


def test_dedup_flag_recovers_duplicates():
    code, out, _ = run(["--dedup", "oracle", "tau"], "HG 3 4 2\n0 1 2\n0 1 2\n")
    assert (code, out) == (0, "1\n")


def test_parameter_error_exit_code():
    code, _, err = run(["gen", "complete", "--n", "3", "--t", "4"])
    assert code == 3


def test_strict_mode_requires_seed():
    code, _, err = run(["--strict", "gen", "random", "--n", "6", "--t", "3", "--p", "0.5"])
    assert code == 3
    assert "--seed" in err
    code, out, _ = run(
        ["--strict", "gen", "random", "--n", "6", "--t", "3", "--p", "0.5", "--seed", "1"]
    )
    assert code == 0 and out.startswith("HG 3 6 ")


def test_resource_guard_exit_code():
    code, _, err = run(["gen", "lines", "--n", "8"])
    assert code == 4
    assert "limit" in err


def test_file_input_and_output(tmp_path):
    src = tmp_path / "in.hg"
    dst = tmp_path / "out.txt"
    src.write_text("HG 3 4 1\n0 1 2\n")
    code, out, _ = run(["-i", str(src), "-o", str(dst), "oracle", "tau"])
    assert code == 0
    assert out == ""
    assert dst.read_text() == "1\n"


def test_generation_repeats_byte_identical():
    a = run(["gen", "ffree", "--n", "12", "--seed", "4"])
    b = run(["gen", "ffree", "--n", "12", "--seed", "4"])
    assert a == b and a[0] == 0


def test_rounding_repeats_byte_identical():
    doc = chain(
        ["gen", "random", "--n", "8", "--t", "3", "--p", "0.4", "--seed", "9"],
        ["blowup", "--k", "2"],
    )
    args = ["round", "ahtp", "--seed", "21", "--trials", "6", "--mode", "exact"]
    assert run(args, doc) == run(args, doc)
