"""Command-line interface: parsing, outputs, exit codes."""

import json

import pytest

from wittcycles.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_nf_symbol(capsys):
    code, out, _ = run(capsys, "nf", "--m", "1", "--vars", "x",
                       "--symbol", "{1+t, x}")
    assert code == 0
    data = json.loads(out)
    assert data["degree"] == 2 and data["canon"]["level"] == 1
    # the single component is dx/x
    assert data["canon"]["comps"][0] == [[[0], {"num": [[[0], "1/1"]],
                                                "den": [[[1], "1/1"]]}]]


def test_nf_exact_symbol_is_zero(capsys):
    code, out, _ = run(capsys, "nf", "--symbol", "{1+t,1+t}")
    assert code == 0
    data = json.loads(out)
    assert data["canon"]["comps"] == [[]]


def test_nf_symbol_sum_and_coefficients(capsys):
    code, out, _ = run(capsys, "nf", "--m", "1", "--vars", "x",
                       "--symbol", "{1+t, x}", "--symbol", "-1*{1+t, x}")
    assert code == 0
    assert json.loads(out)["canon"]["comps"] == [[]]
    # z-coefficients reject fractions
    code, _, err = run(capsys, "nf", "--coeff", "z", "--vars", "x",
                       "--symbol", "1/2*{1+t, x}")
    assert code == 2 and "error" in json.loads(err)


def test_malformed_input_exits_2(capsys):
    code, _, err = run(capsys, "nf", "--symbol", "{1+t")
    assert code == 2
    assert json.loads(err)["error"]["type"] == "ParseError"


def test_cyc_generator(capsys):
    code, out, _ = run(capsys, "cyc", "--m", "2", "--vars", "x",
                       "--gen", "(1-3t; x)", "--pretty")
    assert code == 0
    assert "(-3/x)*dx" in out and "(-9/(2*x))*dx" in out


def test_witt_ops(capsys):
    code, out, _ = run(capsys, "witt", "ghost", "--m", "2", "(3,0)")
    assert code == 0
    ghost = json.loads(out)["ghost"]
    assert ghost[0]["num"] == [[[0], "3/1"]]
    assert ghost[1]["num"] == [[[0], "9/1"]]
    code, out, _ = run(capsys, "witt", "add", "--m", "2", "--vars", "a,b",
                       "(a,0)", "(b,0)", "--pretty")
    assert code == 0
    assert out.strip() == "W(a + b, -a*b)"


def test_drw_phi(capsys):
    code, out, _ = run(capsys, "drw", "phi", "--vars", "x",
                       "--witt", "(3,0)", "--bs", "x", "--pretty")
    assert code == 0
    assert out.strip() == "DRW((3/x)*dx; (9/x)*dx)"


def test_verify_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "drw", "--trials", "5",
                       "--seed", "42")
    assert code == 0
    report = json.loads(out)
    assert report["ok"] and report["suite"] == "drw"
    for prop in report["properties"]:
        assert prop["counterexample"] is None


def test_verify_is_deterministic(capsys):
    _, out1, _ = run(capsys, "verify", "--suite", "witt", "--trials", "5",
                     "--seed", "9")
    _, out2, _ = run(capsys, "verify", "--suite", "witt", "--trials", "5",
                     "--seed", "9")
    r1, r2 = json.loads(out1), json.loads(out2)
    r1.pop("elapsed_s"), r2.pop("elapsed_s")
    assert r1 == r2
