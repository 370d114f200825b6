"""Hall-Littlewood functions.

Abstract ``q_r(.;t)`` and ``q_lam(.;t)`` live in :mod:`symring` (power-sum
basis); concrete ``P_lam(x;t)`` is produced by symmetrization and skew
``P_{lam/mu}(x;t)`` by the tableau sum. The parameter ``t`` is any Laurent
scalar in ``q``: pass ``Q`` for a generic parameter, ``Q**-2`` for the
substitution used by the Frobenius formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Sequence, Tuple

from .partition import (
    Partition,
    as_partition,
    conjugate,
    filling_chain,
    is_horizontal_strip,
    multiplicity,
    partitions_of,
    ssyt_enumerate,
    zee,
)
from .poly import Poly, divide_by_vandermonde, symmetrize_antisymmetric
from .scalar import ONE, Q, LaurentScalar, ScalarFraction
from .symring import SymFunc

T = Q  # the generic parameter is represented by the Laurent variable itself


def phi(r: int, t: LaurentScalar = T) -> LaurentScalar:
    """``prod_{i=1}^r (1 - t^i)``."""
    out = ONE
    for i in range(1, r + 1):
        out = out * (ONE - t ** i)
    return out


def v_count(k: int, t: LaurentScalar = T) -> LaurentScalar:
    """``prod_{i=1}^k (1 - t^i)/(1 - t)``, the t-analogue of ``k!``."""
    out = ONE
    for i in range(1, k + 1):
        out = out * sum((t ** j for j in range(i)), LaurentScalar())
    return out


@dataclass(frozen=True)
class HLCoeffs:
    b: LaurentScalar
    v: LaurentScalar
    phi_list: Tuple[LaurentScalar, ...]


def hl_coeffs(lam: Sequence[int], t: LaurentScalar = T, nvars: int | None = None) -> HLCoeffs:
    """``b_lam = prod phi_{m_i}``, ``v_lam = prod_{i>=0} v_{m_i}`` and ``phi_1..phi_|lam|``.

    ``v`` counts the zero parts ``m_0 = nvars - l(lam)`` when ``nvars`` is
    given; that is the normalizer of the symmetrization formula.
    """
    lam = as_partition(lam)
    mults = [multiplicity(lam, i) for i in sorted(set(lam))]
    b = ONE
    v = ONE
    for mi in mults:
        b = b * phi(mi, t)
        v = v * v_count(mi, t)
    if nvars is not None:
        v = v * v_count(max(nvars - len(lam), 0), t)
    return HLCoeffs(b=b, v=v, phi_list=tuple(phi(i, t) for i in range(1, sum(lam) + 1)))


# -- abstract q-functions ----------------------------------------------------

def _as_param(t) -> ScalarFraction:
    return t if isinstance(t, ScalarFraction) else ScalarFraction._coerce(t)


def hl_q_row(r: int, t=T) -> SymFunc:
    """``q_r(.;t) = sum_{lam |- r} z_lam^-1 prod_i (1 - t^{lam_i}) p_lam``."""
    t = _as_param(t)
    terms = {}
    for lam in partitions_of(r):
        c = ScalarFraction(Fraction(1, zee(lam)))
        for part in lam:
            c = c * (1 - t ** part)
        terms[lam] = c
    return SymFunc("p", terms)


def hl_q_lambda(mu: Sequence[int], t=T) -> SymFunc:
    out = SymFunc("p", {(): 1})
    for part in as_partition(mu):
        out = out * hl_q_row(part, t)
    return out


def hl_tilde_q(r: int) -> SymFunc:
    """``q^r q_r(.;q^-2)``."""
    return hl_q_row(r, Q ** -2).scale(Q ** r)


def hl_tilde_q_definition(r: int) -> SymFunc:
    """``q^r sum_{lam |- r} ((q - q^-1)/q)^{l(lam)} m_lam``, written with Laurent coefficients."""
    if r == 0:
        return SymFunc("m", {(): 1})
    qq = Q - Q ** -1
    return SymFunc("m", {lam: Q ** (r - len(lam)) * qq ** len(lam) for lam in partitions_of(r)})


# -- concrete polynomials ------------------------------------------------------

def monomial_poly(lam: Sequence[int], nvars: int) -> Poly:
    """``m_lam(x_1..x_nvars)``."""
    from itertools import permutations

    lam = as_partition(lam)
    if len(lam) > nvars:
        return Poly(nvars)
    padded = tuple(lam) + (0,) * (nvars - len(lam))
    return Poly(nvars, {e: 1 for e in set(permutations(padded))})


@lru_cache(maxsize=None)
def _kernel(nvars: int, t: LaurentScalar) -> Poly:
    out = Poly.constant(nvars)
    for i in range(nvars):
        xi = Poly.variable(nvars, i)
        for j in range(i + 1, nvars):
            out = out * (xi - Poly.variable(nvars, j).scale(t))
    return out


@lru_cache(maxsize=None)
def _hl_P_concrete(lam: Partition, nvars: int, t: LaurentScalar) -> Poly:
    if len(lam) > nvars:
        return Poly(nvars)
    if nvars == 0:
        return Poly.constant(0)
    lead = tuple(lam) + (0,) * (nvars - len(lam))
    base = Poly(nvars, {lead: 1}) * _kernel(nvars, t)
    numer = symmetrize_antisymmetric(base)
    out = divide_by_vandermonde(numer)
    return out.div_scalar_exact(hl_coeffs(lam, t, nvars).v)


def hl_P_concrete(lam: Sequence[int], nvars: int, t: LaurentScalar = T) -> Poly:
    """``P_lam(x_1..x_nvars; t)`` by symmetrizing ``x^lam prod_{i<j} (x_i - t x_j)/(x_i - x_j)``.

    The Vandermonde denominator is cleared by exact multivariate division.
    """
    return _hl_P_concrete(as_partition(lam), nvars, t)


def psi_strip(outer: Sequence[int], inner: Sequence[int], t: LaurentScalar = T) -> LaurentScalar:
    """``prod_{j in J} (1 - t^{m_j(inner)})`` over columns where the strip's column counts step up."""
    outer, inner = as_partition(outer), as_partition(inner)
    if not is_horizontal_strip(outer, inner):
        raise ValueError(f"{outer}/{inner} is not a horizontal strip")
    oc, ic = conjugate(outer), conjugate(inner)
    width = len(oc) + 1
    theta = [(oc[j] if j < len(oc) else 0) - (ic[j] if j < len(ic) else 0) for j in range(width)]
    out = ONE
    for j in range(1, width):
        # columns are 1-based: theta'_j is theta[j-1]
        if theta[j - 1] < theta[j]:
            out = out * (ONE - t ** multiplicity(inner, j))
    return out


def hl_skew_P(outer: Sequence[int], inner: Sequence[int], nvars: int, t: LaurentScalar = T) -> Poly:
    """``P_{outer/inner}(x_1..x_nvars; t) = sum_T psi_T(t) x^T`` over semistandard fillings."""
    outer, inner = as_partition(outer), as_partition(inner)
    return _hl_skew_P(outer, inner, nvars, t)


@lru_cache(maxsize=None)
def _hl_skew_P(outer: Partition, inner: Partition, nvars: int, t: LaurentScalar) -> Poly:
    acc: Dict[Tuple[int, ...], LaurentScalar] = {}
    for filling in ssyt_enumerate(outer, inner, nvars):
        chain = filling_chain(outer, inner, filling, nvars)
        weight = ONE
        for a, b in zip(chain, chain[1:]):
            if a != b:
                weight = weight * psi_strip(b, a, t)
        if not weight:
            continue
        e = [0] * nvars
        for v in filling.values():
            e[v - 1] += 1
        e = tuple(e)
        acc[e] = acc.get(e, LaurentScalar()) + weight
    return Poly(nvars, acc)


def to_symfunc(poly: Poly) -> SymFunc:
    """Read a symmetric polynomial as an element of the abstract ring (monomial basis).

    Only exact when ``poly.nvars`` is at least the largest degree present.
    """
    terms = {}
    for e, c in poly.items():
        if all(e[i] >= e[i + 1] for i in range(len(e) - 1)):
            terms[as_partition(e)] = c
    return SymFunc("m", terms)


def hl_P(lam: Sequence[int], t: LaurentScalar = T) -> SymFunc:
    """Abstract ``P_lam(.;t)`` in the Schur basis.

    Same symmetrization as :func:`hl_P_concrete` in ``|lam|`` variables, but
    the quotient by the Vandermonde is read off through the bialternant
    formula: the coefficient of ``s_nu`` is the signed coefficient of
    ``x^{nu + delta}`` in the antisymmetrized numerator. Only the
    unsymmetrized term ``x^lam prod (x_i - t x_j)`` is ever expanded.
    """
    return _hl_P_schur(as_partition(lam), t)


@lru_cache(maxsize=None)
def _hl_P_schur(lam: Partition, t: LaurentScalar) -> SymFunc:
    N = sum(lam)
    if N == 0:
        return SymFunc("s", {(): 1})
    lead = tuple(lam) + (0,) * (N - len(lam))
    base = Poly(N, {lead: 1}) * _kernel(N, t)
    acc: Dict[Partition, LaurentScalar] = {}
    for e, c in base.items():
        if len(set(e)) < N:
            continue
        order = sorted(range(N), key=lambda i: -e[i])
        # sign of the sorting permutation
        sign = 1
        seen = [False] * N
        for i in range(N):
            if not seen[i]:
                j, cyc = i, 0
                while not seen[j]:
                    seen[j] = True
                    j = order[j]
                    cyc += 1
                if cyc % 2 == 0:
                    sign = -sign
        nu = as_partition([e[order[i]] - (N - 1 - i) for i in range(N)])
        acc[nu] = acc.get(nu, LaurentScalar()) + (c if sign > 0 else -c)
    v = hl_coeffs(lam, t, N).v
    return SymFunc("s", {nu: c.div_exact(v) for nu, c in acc.items() if c})


def hl_Q(lam: Sequence[int], t: LaurentScalar = T) -> SymFunc:
    return hl_P(lam, t).scale(hl_coeffs(lam, t).b)


def hl_skew_P_abstract(outer: Sequence[int], inner: Sequence[int], t: LaurentScalar = T) -> SymFunc:
    outer, inner = as_partition(outer), as_partition(inner)
    d = sum(outer) - sum(inner)
    return to_symfunc(hl_skew_P(outer, inner, max(d, 1), t))
