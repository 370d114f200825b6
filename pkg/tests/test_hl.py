from fractions import Fraction

import pytest

from superfrob.hl import (
    T,
    hl_coeffs,
    hl_P,
    hl_P_concrete,
    hl_Q,
    hl_q_lambda,
    hl_q_row,
    hl_skew_P,
    hl_skew_P_abstract,
    hl_tilde_q,
    hl_tilde_q_definition,
    monomial_poly,
    phi,
    psi_strip,
    to_symfunc,
    v_count,
)
from superfrob.partition import ShapeError, partitions_of
from superfrob.poly import Poly
from superfrob.scalar import ONE, Q, ZERO, ScalarFraction
from superfrob.superring import specialize
from superfrob.symring import SymFunc, basis_element, h, inner_hl, m, omega, p, s

t = T


def test_q_row_small():
    assert hl_q_row(0, t) == SymFunc("p", {(): 1})
    want = p(2).scale(ScalarFraction((ONE - t ** 2) * Fraction(1, 2))) + p(1, 1).scale(
        ScalarFraction((ONE - t) ** 2 * Fraction(1, 2)))
    assert hl_q_row(2, t) == want
    assert hl_q_row(3, ZERO) == h(3)


@pytest.mark.parametrize("r", range(0, 6))
def test_q_row_at_zero_is_h(r):
    assert hl_q_row(r, ZERO) == (h(r) if r else SymFunc("p", {(): 1}))


def test_q_lambda_products():
    assert hl_q_lambda((1, 1), t) == p(1, 1).scale((ONE - t) ** 2)
    assert hl_q_lambda((), t) == SymFunc("p", {(): 1})
    assert hl_q_lambda((2, 1), t) == hl_q_row(2, t) * hl_q_row(1, t)


def test_coeffs():
    c = hl_coeffs((1, 1), t)
    assert c.b == (ONE - t) * (ONE - t ** 2)
    assert c.v == ONE + t
    assert c.phi_list[0] == ONE - t
    assert v_count(2, t) == ONE + t
    assert phi(3, t) == (ONE - t) * (ONE - t ** 2) * (ONE - t ** 3)


def test_P_concrete_examples():
    assert hl_P_concrete((1,), 2, t) == monomial_poly((1,), 2)
    assert hl_P_concrete((2,), 2, t) == monomial_poly((2,), 2) + monomial_poly((1, 1), 2).scale(ONE - t)
    assert not hl_P_concrete((1, 1, 1), 2, t)


def test_P_11_is_elementary():
    # e_2 with no t-correction once the zero parts are normalized away
    assert hl_P_concrete((1, 1), 2, t) == monomial_poly((1, 1), 2)
    assert hl_P_concrete((1, 1), 3, t) == monomial_poly((1, 1), 3)


@pytest.mark.parametrize("lam", [lam for r in range(1, 6) for lam in partitions_of(r)])
@pytest.mark.parametrize("nv", [1, 2, 3, 4])
def test_P_concrete_symmetric(lam, nv):
    assert hl_P_concrete(lam, nv, t).is_symmetric_in(range(nv))


@pytest.mark.parametrize("lam", [lam for r in range(1, 6) for lam in partitions_of(r)])
def test_P_abstract_matches_concrete(lam):
    for nv in (1, 2, 3):
        assert specialize(hl_P(lam, t), nv) == hl_P_concrete(lam, nv, t)


@pytest.mark.parametrize("r", range(1, 7))
def test_P_row_hook_expansion(r):
    want = SymFunc("s", {(r - i,) + (1,) * i: (-t) ** i for i in range(r)})
    assert hl_P((r,), t) == want


def test_P_at_zero_and_one():
    for lam in partitions_of(4):
        assert hl_P(lam, ZERO) == s(*lam)
        assert hl_P(lam, ONE) == basis_element("m", lam)


@pytest.mark.parametrize("r", range(1, 6))
@pytest.mark.parametrize("nv", [1, 2, 3, 4])
def test_q_row_is_scaled_P(r, nv):
    assert specialize(hl_q_row(r, t), nv) == hl_P_concrete((r,), nv, t).scale(ONE - t)


def test_skew_examples():
    assert hl_skew_P((3,), (3,), 2, t) == Poly.constant(2)
    assert hl_skew_P((2,), (1,), 2, t) == monomial_poly((1,), 2).scale(ONE - t)
    want = monomial_poly((2,), 2).scale(ONE - t) + monomial_poly((1, 1), 2).scale((ONE - t) ** 2)
    assert hl_skew_P((3,), (1,), 2, t) == want
    with pytest.raises(ShapeError):
        hl_skew_P((1,), (2,), 2, t)


def test_psi_strip():
    assert psi_strip((2,), (1,), t) == ONE - t
    assert psi_strip((1,), (), t) == ONE
    assert psi_strip((2, 1), (1, 1), t) == ONE - t ** 2
    with pytest.raises(ValueError):
        psi_strip((1, 1), (), t)


@pytest.mark.parametrize("lam", [lam for r in range(1, 6) for lam in partitions_of(r)])
def test_straight_tableau_sum_matches_symmetrization(lam):
    for nv in (1, 2, 3):
        assert hl_skew_P(lam, (), nv, t) == hl_P_concrete(lam, nv, t)


def test_skew_abstract_straight_shape():
    assert hl_skew_P_abstract((3, 1), (), t) == hl_P((3, 1), t)


def test_to_symfunc():
    assert to_symfunc(monomial_poly((2, 1), 3)) == m(2, 1)


def test_inner_hl_examples():
    assert inner_hl(hl_q_lambda((1,), t), m(1), t) == 1
    assert inner_hl(hl_P((1, 1), t), hl_Q((1, 1), t), t) == 1
    assert inner_hl(hl_q_lambda((2,), t), m(1, 1), t) == 0


def test_tilde_q():
    assert hl_tilde_q(0) == SymFunc("p", {(): 1})
    assert hl_tilde_q(1) == p(1).scale(Q - Q ** -1)
    for r in range(0, 6):
        assert hl_tilde_q(r) == hl_tilde_q_definition(r)


def test_omega_row_small():
    # omega P_(2) = -t^-1 P_(2)(t x; t^-1) at two variables
    lhs = specialize(omega(hl_P((2,), t)), 2)
    rhs = hl_P_concrete((2,), 2, t ** -1).scale_variables([t, t]).scale(-(t ** -1))
    assert lhs == rhs
