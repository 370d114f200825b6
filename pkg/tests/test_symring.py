from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from superfrob.partition import all_permutations, conjugate, cycle_type, partitions_of
from superfrob.poly import Poly, vandermonde
from superfrob.scalar import Q, ScalarFraction
from superfrob.symring import (
    BASES,
    SizeMismatch,
    SymFunc,
    basis_element,
    convert,
    e,
    h,
    inner_standard,
    jacobi_trudi_h,
    m,
    mn_character,
    omega,
    p,
    s,
    schur_from_characters,
)

from strategies import partitions, small_int_laurent


def test_h2_in_power_sums():
    assert h(2).convert("p") == SymFunc("p", {(2,): Fraction(1, 2), (1, 1): Fraction(1, 2)})


def test_e2_in_monomials():
    got = e(2).convert("m")
    assert got.basis == "m" and dict(got.items()) == {(1, 1): 1}


def test_s21_in_power_sums():
    assert s(2, 1).convert("p") == p(1, 1, 1).scale(Fraction(1, 3)) - p(3).scale(Fraction(1, 3))


def test_inner_standard_examples():
    assert inner_standard(p(2), p(2)) == 2
    assert inner_standard(s(2), s(1, 1)) == 0
    assert inner_standard(s(2, 1), s(2, 1)) == 1
    assert inner_standard(p(2), p(1)) == 0


@pytest.mark.parametrize("r", range(0, 7))
def test_schur_orthonormal(r):
    keys = partitions_of(r)
    for lam in keys:
        for mu in keys:
            assert inner_standard(s(*lam), s(*mu)) == (1 if lam == mu else 0)


def test_omega_examples():
    assert omega(p(2)) == -p(2)
    assert omega(h(3)) == e(3)
    assert omega(s(2, 1)) == s(2, 1)


@pytest.mark.parametrize("r", range(1, 7))
def test_omega_conjugates_schur(r):
    for lam in partitions_of(r):
        assert omega(s(*lam)) == s(*conjugate(lam))


@st.composite
def sym_elements(draw):
    basis = draw(st.sampled_from(BASES))
    keys = draw(st.lists(partitions(max_size=6), max_size=4))
    coeffs = draw(st.lists(small_int_laurent(), min_size=len(keys), max_size=len(keys)))
    return SymFunc(basis, dict(zip(keys, coeffs)))


@given(sym_elements())
def test_omega_involution(f):
    assert omega(omega(f)) == f


@given(sym_elements(), st.sampled_from(BASES))
def test_convert_roundtrip(f, target):
    g = convert(f, target)
    assert g.basis == target
    back = convert(g, f.basis)
    assert dict(back.items()) == dict(f.items())


@given(sym_elements())
def test_json_roundtrip(f):
    assert SymFunc.from_json(f.to_json()) == f


def test_json_schema():
    f = SymFunc("p", {(2, 1): ScalarFraction(Q - 1, Q + 1)})
    assert f.to_json() == {"basis": "p", "terms": [{"partition": [2, 1], "coeff": "(q - 1)/(q + 1)"}]}


@pytest.mark.parametrize("r", range(1, 7))
def test_every_basis_roundtrips_schur(r):
    for lam in partitions_of(r):
        for b in BASES:
            assert dict(convert(convert(s(*lam), b), "s").items()) == {lam: 1}


@pytest.mark.parametrize("r", range(1, 7))
def test_schur_from_characters(r):
    for lam in partitions_of(r):
        assert schur_from_characters(lam) == s(*lam)


@pytest.mark.parametrize("r", range(1, 7))
def test_jacobi_trudi(r):
    for lam in partitions_of(r):
        assert jacobi_trudi_h(lam) == convert(s(*lam), "h")


def test_products_stay_in_basis():
    assert (h(2) * h(1)).basis == "h"
    assert dict((e(2) * e(1)).items()) == {(2, 1): 1}
    assert (m(1) * m(1)) == m(2) + m(1, 1).scale(2)


def test_degree_tracking():
    assert s(2, 1).degree == 3
    assert (p(3) + p(1)).degree == "mixed"
    assert (p(3) + p(1)).homogeneous_part(1) == p(1)


def test_mn_examples():
    assert mn_character((2, 1), (3,)) == -1
    assert mn_character((1, 1), (2,)) == -1
    for mu in partitions_of(5):
        assert mn_character((5,), mu) == 1
    with pytest.raises(SizeMismatch):
        mn_character((2,), (1,))


def _brute_characters(r):
    """Characters from the alternant: coefficient of x^{lam+delta} in a_delta p_mu."""
    delta = tuple(range(r - 1, -1, -1))
    vdm = vandermonde(r)
    psum = [None] + [Poly(r, {tuple(k if i == j else 0 for j in range(r)): 1 for i in range(r)}) for k in range(1, r + 1)]
    out = {}
    for mu in partitions_of(r):
        poly = vdm
        for part in mu:
            poly = poly * psum[part]
        for lam in partitions_of(r):
            e_ = tuple((lam[i] if i < len(lam) else 0) + delta[i] for i in range(r))
            out[(lam, mu)] = poly.coefficient(e_).constant_value()
    return out


@pytest.mark.parametrize("r", range(1, 6))
def test_mn_against_alternant(r):
    brute = _brute_characters(r)
    for (lam, mu), v in brute.items():
        assert mn_character(lam, mu) == v


@pytest.mark.parametrize("r", range(1, 6))
def test_mn_orthogonality_over_group(r):
    keys = partitions_of(r)
    types = [cycle_type(w) for w in all_permutations(r)]
    for lam in keys:
        for nu in keys:
            total = sum(mn_character(lam, c) * mn_character(nu, c) for c in types)
            assert total == (factorial(r) if lam == nu else 0)


def test_basis_element_scaled():
    assert basis_element("s", (2,), 3) == s(2).scale(3)
