import json
import os
import subprocess
from fractions import Fraction

import pytest

import fplpoly


def test_groundstate_n3():
    assert fplpoly.groundstate(3) == {
        "((()))": 1, "(()())": 2, "(())()": 1, "()(())": 1, "()()()": 2,
    }


def test_fpl_counts_match_groundstate():
    for n in range(1, 5):
        assert fplpoly.count_by_matching(n) == fplpoly.groundstate(n)
        assert fplpoly.count_fpl(n) == fplpoly.a_n(n)


def test_psi_tau_and_poly():
    # psi_{()()}(tau) = tau, and the t = 0 slice of psi(tau, t) is psi(tau).
    assert fplpoly.psi_tau("()()") == [0, 1]
    for pi in fplpoly.matchings(3):
        assert fplpoly.psi_poly(pi)[0] == fplpoly.psi_tau(pi)


def test_g_signs_n2():
    assert [sum(fplpoly.g_poly(w)) for w in fplpoly.matchings(2)] == [1, -1]
    assert all(isinstance(c, Fraction) for c in fplpoly.g_poly("(())"))


def test_refined_asm():
    assert fplpoly.refined_asm_counts(3) == [2, 3, 2]
    assert [fplpoly.a_v(n) for n in (1, 3, 5, 7, 9)] == [1, 1, 3, 26, 646]
    assert fplpoly.a_v(4) == 0


def test_c_matrix_diagonal():
    c = fplpoly.c_matrix(3)
    for w in fplpoly.matchings(3):
        assert c[w][w] == {"var": "tau", "coeffs": ["1"]}


def test_factor_check_and_suite():
    assert fplpoly.factor_check("(())()", 2)
    report = fplpoly.run_suite("rs", 3, seed=1)
    assert report["passed"] and all(c["status"] == "pass" for c in report["checks"])


def test_usage_errors_raise_value_error():
    with pytest.raises(ValueError):
        fplpoly.run_suite("nope", 3)
    with pytest.raises(ValueError):
        fplpoly.groundstate(9)


def test_table():
    assert json.loads(fplpoly.table("g", 2)) == {"(())": "1", "()()": "-1"}


@pytest.mark.skipif("FPLPOLY_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_exit_codes():
    cli = os.environ["FPLPOLY_CLI"]
    run = lambda *a: subprocess.run([cli, *a], capture_output=True, text=True)
    ok = run("verify", "--suite", "qkz-spot", "--n-max", "2", "--json")
    assert ok.returncode == 0 and json.loads(ok.stdout)["passed"]
    assert run("verify", "--suite", "rs", "--n-max", "99").returncode == 2
    assert run("verify", "--suite", "unknown").returncode == 2
    assert run("psi", "--pi", "(()").returncode == 2
    assert run("groundstate", "--n", "3").stdout.split()[:2] == ["((()))", "1"]
