"""Exact O(1) loop groundstates, their (tau, t) deformations, FPL and ASM counts."""

import json
from fractions import Fraction

from . import _fplpoly

__all__ = [
    "matchings", "psi_tau", "psi_poly", "g_poly", "groundstate", "count_fpl",
    "count_by_matching", "refined_asm_counts", "a_n", "a_v", "c_matrix",
    "factor_check", "run_suite", "table", "suite_names",
]


def _fracs(coeffs):
    return [Fraction(c) for c in coeffs]


def matchings(n):
    """Parenthesis words of all matchings of size n, in the library's order."""
    return _fplpoly.matchings(n)


def psi_tau(pi):
    """Coefficients of psi_pi(tau), ascending in tau."""
    return _fracs(_fplpoly.psi_tau(pi))


def psi_poly(pi):
    """psi_pi(tau, t) as a list over powers of t of tau-coefficient lists."""
    return [_fracs(c) for c in _fplpoly.psi_poly(pi)]


def g_poly(pi):
    return _fracs(_fplpoly.g_poly(pi))


def groundstate(n):
    """{word: psi_pi} at tau = 1, normalised so the fully nested matching has 1."""
    return dict(zip(matchings(n), map(int, _fplpoly.groundstate(n))))


def count_fpl(n):
    return _fplpoly.count_fpl(n)


def count_by_matching(n):
    return dict(zip(matchings(n), map(int, _fplpoly.count_by_matching(n))))


def refined_asm_counts(n):
    return [int(x) for x in _fplpoly.refined_asm_counts(n)]


def a_n(n):
    return int(_fplpoly.a_n(n))


def a_v(n):
    return int(_fplpoly.a_v(n))


def c_matrix(n, inverse=False):
    """{a: {pi: tau-polynomial JSON}} with zero entries left out."""
    return json.loads(_fplpoly.c_matrix_json(n, inverse))


def factor_check(pi, p):
    return _fplpoly.factor_check(pi, p)


def run_suite(name, n_max, seed=0):
    """Report dict with per-check status; report["passed"] summarises."""
    return json.loads(_fplpoly.run_suite_json(name, n_max, seed))


def table(kind, n, format="json"):
    return _fplpoly.emit_table(kind, n, format)


def suite_names():
    return list(_fplpoly.suite_names())
