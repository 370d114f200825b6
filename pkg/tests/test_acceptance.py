"""Acceptance criteria, one test each. Every comparison is exact.

Each test prints a single ``PASS``/``FAIL`` line, also under pytest's output
capture; ``python3 tests/test_acceptance.py`` prints just the eight lines.
"""

import sys
import time
from fractions import Fraction

import pytest

from superfrob.frobenius import char_table, char_value, frobenius_element
from superfrob.heckesim import d_commutes, gamma_word, hecke_relations, prop51_trace, trace_d_pi, xy_substitute
from superfrob.hl import T, hl_P, hl_P_concrete, hl_Q, hl_q_lambda, hl_skew_P, monomial_poly
from superfrob.partition import compositions_of, count_standard_tableaux, hook_set, partitions_of, zee
from superfrob.poly import Poly
from superfrob.scalar import ONE, Q
from superfrob.superring import (
    SuperPoly,
    combine_schur,
    specialize,
    specialize_super,
    super_gen,
    super_hl_P,
    super_schur,
)
from superfrob.symring import SymFunc, basis_element, inner_hl, mn_character, omega

QM = Q - Q ** -1
NEG = -(Q ** -1)
ROW_GRID = [(1, 1), (2, 1), (2, 2)]


def _report(number, title, failures, extra=""):
    status = "PASS" if not failures else "FAIL"
    line = f"[{status}] criterion {number}: {title}"
    if extra:
        line += f" ({extra})"
    if failures:
        line += f"; first failures: {failures[:3]}"
    print(line, flush=True)
    return not failures


def criterion_1():
    failures = []
    start = time.perf_counter()
    for m, n in ROW_GRID:
        for k in range(1, 7):
            lhs = xy_substitute(trace_d_pi(gamma_word((k,)), k, m, n), m, n)
            rhs = super_gen("q_row", k, m, n, Q ** -2).scale(Q ** k).div_scalar_exact(QM)
            if lhs != rhs:
                failures.append((k, m, n))
    x, y = SuperPoly.x(1, 1, 0), SuperPoly.y(1, 1, 0)
    anchor = (x * x).scale(Q) - (x * y).scale(QM) - (y * y).scale(Q ** -1)
    if xy_substitute(trace_d_pi([1], 2, 1, 1), 1, 1) != anchor:
        failures.append("k=2 anchor")
    elapsed = time.perf_counter() - start
    if elapsed >= 60:
        failures.append(f"runtime {elapsed:.1f}s")
    return _report(1, "row-cycle trace equals scaled super q-function", failures, f"{elapsed:.1f}s")


def criterion_2():
    failures = []
    m = n = 3
    for r in range(1, 6):
        hooks = hook_set(m, n, r)
        for mu in partitions_of(r):
            frob = specialize_super(frobenius_element(mu), m, n)
            schur_sum = combine_schur({lam: char_value(lam, mu) for lam in hooks}, m, n)
            trace = xy_substitute(trace_d_pi(gamma_word(mu), r, m, n), m, n)
            if not (frob == schur_sum == trace):
                failures.append(mu)
    return _report(2, "Frobenius element = character-weighted super Schur sum = tensor trace", failures)


def criterion_3():
    failures = [(k, m, n) for m, n in ROW_GRID for k in range(1, 7)
                if prop51_trace(k, m, n) != trace_d_pi(gamma_word((k,)), k, m, n)]
    return _report(3, "closed-form row trace over weakly increasing words", failures)


def criterion_4():
    failures = []
    for m, n in ROW_GRID:
        for r in range(1, 6):
            for alpha in compositions_of(r):
                whole = trace_d_pi(gamma_word(alpha), r, m, n)
                prod = Poly.constant(m + n)
                for a in alpha:
                    prod = prod * trace_d_pi(gamma_word((a,)), a, m, n)
                if whole != prod:
                    failures.append((alpha, m, n))
    return _report(4, "trace factorizes over composition blocks", failures)


def criterion_5():
    failures = []
    for m, n in [(1, 1), (2, 2)]:
        for r in range(2, 5):
            rel = hecke_relations(r, m, n)
            failures += [(name, r, m, n) for name, ok in rel.items() if not ok]
            if not d_commutes(r, m, n):
                failures.append(("D", r, m, n))
    return _report(5, "Hecke relations and diagonal commutation", failures)


def _h_power_sum(k):
    return SymFunc("p", {lam: Fraction(1, zee(lam)) for lam in partitions_of(k)})


def criterion_6():
    failures = []
    t = T
    for k in range(1, 7):
        if super_gen("h", k, 2, 2) != specialize_super(_h_power_sum(k), 2, 2):
            failures.append(("h-power-sum", k))
    for r in range(1, 6):
        for lam in partitions_of(r):
            if super_schur(lam, 3, 3, "jacobi_trudi") != super_schur(lam, 3, 3, "cancel"):
                failures.append(("jacobi-trudi", lam))
    for r in range(1, 7):
        for nv in (1, 2, 3):
            for k in range(0, r + 1):
                got = hl_skew_P((r,), (k,), nv, t)
                if k == 0:
                    want = hl_P_concrete((r,), nv, t)
                elif k == r:
                    want = Poly.constant(nv)
                else:
                    want = hl_P_concrete((r - k,), nv, t).scale(ONE - t)
                    mono = sum((monomial_poly(nu, nv).scale((ONE - t) ** len(nu)) for nu in partitions_of(r - k)),
                               Poly(nv))
                    if got != mono:
                        failures.append(("skew-monomial", r, k, nv))
                if got != want:
                    failures.append(("skew-row", r, k, nv))
            lhs = specialize(omega(hl_P((r,), t)), nv)
            rhs = hl_P_concrete((r,), nv, t ** -1).scale_variables([t] * nv).scale(t ** -1 * (-1) ** (r - 1))
            if lhs != rhs:
                failures.append(("omega-row", r, nv))
    if super_hl_P((), 2, 2, t) != SuperPoly.one(2, 2):
        failures.append("super-P-empty")
    for r in range(1, 7):
        if super_hl_P((r,), 2, 2, t).scale(ONE - t) != super_gen("q_row", r, 2, 2, t):
            failures.append(("super-P-row", r))
    for r in range(1, 6):
        for lam in partitions_of(r):
            chars = SymFunc("p", {mu: Fraction(mn_character(lam, mu), zee(mu)) for mu in partitions_of(r)})
            if super_schur(lam, 3, 3) != specialize_super(chars, 3, 3):
                failures.append(("schur-characters", lam))
    if super_schur((2, 2), 1, 1):
        failures.append("hook-vanishing")
    return _report(6, "symmetric and supersymmetric function identities", failures)


def criterion_7():
    failures = []
    for d in range(1, 6):
        keys = partitions_of(d)
        for lam in keys:
            for mu in keys:
                want = 1 if lam == mu else 0
                if inner_hl(hl_q_lambda(lam, T), basis_element("m", mu), T) != want:
                    failures.append(("q-m", lam, mu))
                if inner_hl(hl_P(lam, T), hl_Q(mu, T), T) != want:
                    failures.append(("P-Q", lam, mu))
    return _report(7, "Hall-Littlewood dual bases", failures)


def criterion_8():
    failures = []
    for r in range(1, 7):
        table = char_table(r)
        keys = partitions_of(r)
        ones = (1,) * r
        for lam in keys:
            for mu in keys:
                v = table.value(lam, mu)
                if not v.has_integer_coefficients():
                    failures.append(("integral", lam, mu))
                if v.evaluate(1) != mn_character(lam, mu):
                    failures.append(("q=1", lam, mu))
            if table.value(lam, ones) != count_standard_tableaux(lam):
                failures.append(("dimension", lam))
        for mu in keys:
            if table.value((r,), mu) != Q ** (r - len(mu)):
                failures.append(("trivial row", mu))
            if table.value(ones, mu) != NEG ** (r - len(mu)):
                failures.append(("sign row", mu))
    return _report(8, "character table regression up to degree 6", failures)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 9)])
def test_criterion(criterion, capsys):
    with capsys.disabled():
        ok = criterion()
    assert ok


if __name__ == "__main__":
    results = [c() for c in CRITERIA]
    print(f"{sum(results)}/{len(results)} criteria passed")
    sys.exit(0 if all(results) else 1)
