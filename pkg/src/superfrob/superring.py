"""Concrete supersymmetric polynomials in ``x_1..x_m, y_1..y_n``.

The abstract ring maps here through ``p_k -> p_k(x) - p_k(y)``. Generators
are also built independently from their generating series, and super
Schur functions from two different determinantal/cancellation formulas,
so the identities between them can be checked as exact polynomial
equalities.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Dict, List, Mapping, Sequence, Tuple

from .hl import T, hl_P_concrete, hl_skew_P_abstract
from .partition import (
    Partition,
    as_partition,
    conjugate,
    hook_set,
    partitions_of,
    permutation_sign,
    ssyt_enumerate,
    subpartitions,
)
from .poly import Poly
from .scalar import ONE, LaurentScalar, NotDivisible, parse_laurent
from .symring import SymFunc, omega


class NonPolynomialResult(ArithmeticError):
    pass


class NotInSpan(ArithmeticError):
    pass


class RankDeficient(ArithmeticError):
    pass


class SuperPoly(Poly):
    """Polynomial in ``x_1..x_m, y_1..y_n``; exponent tuples list x's then y's."""

    __slots__ = ("m", "n")

    def __init__(self, m: int, n: int, terms=None):
        self.m = m
        self.n = n
        super().__init__(m + n, terms)

    def _copy_meta(self, obj):
        obj.m = self.m
        obj.n = self.n

    @classmethod
    def from_poly(cls, poly: Poly, m: int, n: int) -> "SuperPoly":
        if poly.nvars != m + n:
            raise ValueError("variable count mismatch")
        return cls(m, n, poly.terms)

    @classmethod
    def one(cls, m: int, n: int) -> "SuperPoly":
        return cls(m, n, {(0,) * (m + n): 1})

    @classmethod
    def x(cls, m: int, n: int, i: int) -> "SuperPoly":
        e = [0] * (m + n)
        e[i] = 1
        return cls(m, n, {tuple(e): 1})

    @classmethod
    def y(cls, m: int, n: int, j: int) -> "SuperPoly":
        e = [0] * (m + n)
        e[m + j] = 1
        return cls(m, n, {tuple(e): 1})

    def flip_y(self) -> "SuperPoly":
        """Substitute ``y_j -> -y_j``. The single place the sign convention lives."""
        return self.negate_variables(range(self.m, self.m + self.n))

    def is_supersymmetric_shape(self) -> bool:
        """Separately symmetric in the x's and in the y's."""
        return self.is_symmetric_in(range(self.m)) and self.is_symmetric_in(range(self.m, self.m + self.n))

    def _var_names(self):
        return [f"x{i + 1}" for i in range(self.m)] + [f"y{j + 1}" for j in range(self.n)]

    def __eq__(self, other):
        if isinstance(other, SuperPoly) and (other.m, other.n) != (self.m, self.n):
            return False
        return super().__eq__(other)

    __hash__ = Poly.__hash__

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "terms": [
                {"x": list(e[: self.m]), "y": list(e[self.m :]), "coeff": str(self._t[e])}
                for e in sorted(self._t, reverse=True)
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SuperPoly":
        return cls(
            data["m"],
            data["n"],
            {tuple(t["x"]) + tuple(t["y"]): parse_laurent(t["coeff"]) for t in data["terms"]},
        )


def embed_x(poly: Poly, m: int, n: int) -> SuperPoly:
    """Place a polynomial in ``m`` variables on the x-alphabet."""
    return SuperPoly.from_poly(poly.embed(m + n, list(range(m))), m, n)


def embed_y(poly: Poly, m: int, n: int) -> SuperPoly:
    """Place a polynomial in ``n`` variables on the y-alphabet."""
    return SuperPoly.from_poly(poly.embed(m + n, list(range(m, m + n))), m, n)


# -- specialization ----------------------------------------------------------

@lru_cache(maxsize=None)
def power_sum_super(k: int, m: int, n: int) -> SuperPoly:
    """``p_k(x/y) = sum x_i^k - sum y_j^k``."""
    if k <= 0:
        raise ValueError("power sums are indexed from 1")
    terms = {}
    for i in range(m + n):
        e = [0] * (m + n)
        e[i] = k
        terms[tuple(e)] = 1 if i < m else -1
    return SuperPoly(m, n, terms)


@lru_cache(maxsize=None)
def _p_lambda_super(lam: Partition, m: int, n: int) -> SuperPoly:
    if not lam:
        return SuperPoly.one(m, n)
    return _p_lambda_super(lam[1:], m, n) * power_sum_super(lam[0], m, n)


def specialize_super(f: SymFunc, m: int, n: int) -> SuperPoly:
    """Image of ``f`` under ``p_k -> p_k(x) - p_k(y)``.

    Coefficients are brought to a common denominator, the polynomial is
    assembled, and the denominator is divided out exactly.
    """
    g = f.to_p()
    den = ONE
    for _, c in g.items():
        if c.den != ONE and c.den != den:
            try:
                den.div_exact(c.den)
            except NotDivisible:
                den = den * c.den.div_exact(_gcd_laurent(den, c.den))
    acc = SuperPoly(m, n)
    for lam, c in g.items():
        scaled = c.num * den.div_exact(c.den)
        acc = acc + _p_lambda_super(lam, m, n).scale(scaled)
    if den == ONE:
        return acc
    try:
        return acc.div_scalar_exact(den)
    except NotDivisible as exc:
        raise NonPolynomialResult(f"specialization of {f} has non-Laurent coefficients") from exc


def _gcd_laurent(a: LaurentScalar, b: LaurentScalar) -> LaurentScalar:
    from .scalar import _from_poly, _poly_gcd, _to_poly

    return _from_poly(_poly_gcd(_to_poly(a)[1], _to_poly(b)[1]), 0)


def specialize(f: SymFunc, nvars: int) -> Poly:
    """Ordinary evaluation at ``nvars`` variables."""
    return Poly(nvars, specialize_super(f, nvars, 0).terms)


# -- generators from series ----------------------------------------------------

Series = List[SuperPoly]


def _series_mul(a: Series, b: Series, k: int) -> Series:
    out = [a[0] * 0 for _ in range(k + 1)]
    for i, ai in enumerate(a[: k + 1]):
        if not ai:
            continue
        for j, bj in enumerate(b[: k + 1 - i]):
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return out


def _geometric(var: SuperPoly, c: LaurentScalar, k: int, m: int, n: int) -> Series:
    """``1/(1 - c var u)`` truncated at ``u^k``."""
    out = [SuperPoly.one(m, n)]
    for _ in range(k):
        out.append(out[-1] * var.scale(c))
    return out


def _linear(var: SuperPoly, c: LaurentScalar, k: int, m: int, n: int) -> Series:
    """``1 + c var u``."""
    out = [SuperPoly.one(m, n), var.scale(c)]
    return (out + [SuperPoly(m, n)] * k)[: k + 1]


def super_gen(kind: str, k: int, m: int, n: int, t: LaurentScalar = T) -> SuperPoly:
    """Coefficient of ``u^k`` in the generating series of ``e``, ``h``, ``p`` or ``q_row``.

    e: prod (1 + x_i u) / prod (1 + y_j u)
    h: prod (1 - y_j u) / prod (1 - x_i u)
    q_row: prod (1 - t x_i u)/(1 - x_i u) * prod (1 - y_j u)/(1 - t y_j u)
    """
    if kind == "p":
        return power_sum_super(k, m, n)
    if k < 0:
        return SuperPoly(m, n)
    one = LaurentScalar.const(1)
    factors: List[Series] = []
    for i in range(m):
        xi = SuperPoly.x(m, n, i)
        if kind == "e":
            factors.append(_linear(xi, one, k, m, n))
        elif kind == "h":
            factors.append(_geometric(xi, one, k, m, n))
        elif kind == "q_row":
            factors.append(_linear(xi, -t, k, m, n))
            factors.append(_geometric(xi, one, k, m, n))
        else:
            raise ValueError(f"unknown generator kind {kind!r}")
    for j in range(n):
        yj = SuperPoly.y(m, n, j)
        if kind == "e":
            factors.append(_geometric(yj, -one, k, m, n))
        elif kind == "h":
            factors.append(_linear(yj, -one, k, m, n))
        else:
            factors.append(_linear(yj, -one, k, m, n))
            factors.append(_geometric(yj, t, k, m, n))
    series: Series = [SuperPoly.one(m, n)] + [SuperPoly(m, n)] * k
    for f in factors:
        series = _series_mul(series, f, k)
    return series[k]


# -- Schur functions -----------------------------------------------------------

def schur_poly(outer: Sequence[int], inner: Sequence[int], nvars: int) -> Poly:
    """Ordinary (skew) Schur polynomial as a tableau sum."""
    acc: Dict[Tuple[int, ...], int] = {}
    for filling in ssyt_enumerate(outer, inner, nvars):
        e = [0] * nvars
        for v in filling.values():
            e[v - 1] += 1
        e = tuple(e)
        acc[e] = acc.get(e, 0) + 1
    return Poly(nvars, acc)


def _det(mat: List[List[SuperPoly]], m: int, n: int) -> SuperPoly:
    size = len(mat)
    out = SuperPoly(m, n) if size else SuperPoly.one(m, n)
    for w in permutations(range(size)):
        term = SuperPoly.one(m, n)
        for i in range(size):
            entry = mat[i][w[i]]
            if not entry:
                term = None
                break
            term = term * entry
        if term is not None:
            out = out + term if permutation_sign(w) > 0 else out - term
    return out


def super_schur(lam: Sequence[int], m: int, n: int, method: str = "cancel") -> SuperPoly:
    """``s_lam(x/y)``.

    cancel: ``sum_{mu ⊆ lam} s_mu(x) s_{lam'/mu'}(-y)``
    jacobi_trudi: ``det[h_{lam_i - i + j}(x/y)]``
    dual_jacobi_trudi: ``det[e_{lam'_i - i + j}(x/y)]``
    """
    lam = as_partition(lam)
    return _super_schur(lam, m, n, method)


@lru_cache(maxsize=None)
def _super_schur(lam: Partition, m: int, n: int, method: str) -> SuperPoly:
    if method == "cancel":
        lc = conjugate(lam)
        acc = SuperPoly(m, n)
        for mu in subpartitions(lam):
            sx = schur_poly(mu, (), m)
            if not sx:
                continue
            sy = schur_poly(lc, conjugate(mu), n)
            if not sy:
                continue
            acc = acc + embed_x(sx, m, n) * embed_y(sy, m, n).flip_y()
        return acc
    if method in ("jacobi_trudi", "dual_jacobi_trudi"):
        kind, shape = ("h", lam) if method == "jacobi_trudi" else ("e", conjugate(lam))
        size = len(shape)
        mat = [[_gen_cached(kind, shape[i] - i + j, m, n) for j in range(size)] for i in range(size)]
        return _det(mat, m, n)
    raise ValueError(f"unknown method {method!r}")


@lru_cache(maxsize=None)
def _gen_cached(kind: str, k: int, m: int, n: int) -> SuperPoly:
    return super_gen(kind, k, m, n)


# -- Hall-Littlewood supersymmetric functions ----------------------------------

def super_hl_P(lam: Sequence[int], m: int, n: int, t: LaurentScalar = T) -> SuperPoly:
    """``sum_{mu ⊆ lam} P_mu(x;t) (omega P_{lam/mu})(-y;t)``.

    The involution acts in the abstract ring before the y-evaluation.
    """
    lam = as_partition(lam)
    acc = SuperPoly(m, n)
    for mu in subpartitions(lam):
        px = hl_P_concrete(mu, m, t)
        if not px:
            continue
        skew = omega(hl_skew_P_abstract(lam, mu, t))
        py = specialize(skew, n)
        if not py:
            continue
        acc = acc + embed_x(px, m, n) * embed_y(py, m, n).flip_y()
    return acc


# -- expansion in super Schur functions ----------------------------------------

@dataclass
class SuperSchurExpansion:
    degree: int
    coefficients: Dict[Partition, LaurentScalar] = field(default_factory=dict)

    def to_json(self) -> dict:
        keys = [lam for lam in partitions_of(self.degree) if lam in self.coefficients]
        return {
            "degree": self.degree,
            "coefficients": [{"partition": list(k), "coeff": str(self.coefficients[k])} for k in keys],
        }


def super_schur_expand(P: SuperPoly, r: int) -> SuperSchurExpansion:
    """Coefficients ``c_lam`` with ``P = sum c_lam s_lam(x/y)``, ``lam`` in the (m, n)-hook set.

    The basis polynomials have rational coefficients, so elimination runs
    over ``Q`` with the right-hand side carried as Laurent scalars.
    """
    m, n = P.m, P.n
    if any(d != r for d in P.degrees()):
        raise ValueError(f"expansion needs a homogeneous polynomial of degree {r}")
    keys = hook_set(m, n, r)
    basis = [super_schur(lam, m, n) for lam in keys]
    support = sorted(set().union(*(set(b.terms) for b in basis), set(P.terms)), reverse=True)
    rows = [[Fraction(b.coefficient(e).constant_value()) for b in basis] for e in support]
    rhs = [P.coefficient(e) for e in support]
    ncol = len(keys)
    pivots: List[int] = []
    r_idx = 0
    for col in range(ncol):
        piv = next((i for i in range(r_idx, len(rows)) if rows[i][col]), None)
        if piv is None:
            raise RankDeficient(f"super Schur basis is dependent at (m, n) = ({m}, {n}); enlarge the alphabets")
        rows[r_idx], rows[piv] = rows[piv], rows[r_idx]
        rhs[r_idx], rhs[piv] = rhs[piv], rhs[r_idx]
        pv = rows[r_idx][col]
        rows[r_idx] = [x / pv for x in rows[r_idx]]
        rhs[r_idx] = rhs[r_idx] * (1 / pv)
        for i in range(len(rows)):
            if i != r_idx and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r_idx])]
                rhs[i] = rhs[i] - rhs[r_idx] * f
        pivots.append(col)
        r_idx += 1
    if any(rhs[i] for i in range(r_idx, len(rows))):
        raise NotInSpan("polynomial is not in the span of the super Schur functions")
    coeffs = {keys[col]: rhs[i] for i, col in enumerate(pivots) if rhs[i]}
    return SuperSchurExpansion(degree=r, coefficients=coeffs)


def combine_schur(coeffs: Mapping[Partition, LaurentScalar], m: int, n: int) -> SuperPoly:
    acc = SuperPoly(m, n)
    for lam, c in coeffs.items():
        acc = acc + super_schur(lam, m, n).scale(c)
    return acc
