"""Named verification suites.

Each suite returns a :class:`~superfrob.frobenius.Report` of exact checks.
``SuiteConfig`` bounds the degree and optionally pins the alphabet sizes;
left unset, every suite runs its default grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .frobenius import Report, char_table, mn_table_matches, verify_super_frobenius
from .heckesim import (
    d_commutes,
    gamma_word,
    hecke_relations,
    prop51_trace,
    trace_d_pi,
    xy_substitute,
)
from .hl import (
    T,
    hl_P,
    hl_P_concrete,
    hl_Q,
    hl_q_lambda,
    hl_skew_P,
    hl_tilde_q,
    hl_tilde_q_definition,
    monomial_poly,
)
from .partition import compositions_of, conjugate, count_standard_tableaux, partitions_of, zee
from .poly import Poly
from .scalar import ONE, Q, LaurentScalar
from .superring import (
    SuperPoly,
    embed_x,
    embed_y,
    power_sum_super,
    specialize,
    specialize_super,
    super_gen,
    super_hl_P,
    super_schur,
)
from .symring import SymFunc, basis_element, inner_hl, omega, schur_from_characters

QMINUS = Q - Q ** -1
SUITES = ("identities-sec2", "hecke-relations", "prop51", "frobenius", "q1-specialization", "all")


@dataclass(frozen=True)
class SuiteConfig:
    r: Optional[int] = None
    m: Optional[int] = None
    n: Optional[int] = None
    jobs: int = 1

    def degree(self, default: int) -> int:
        return default if self.r is None else self.r

    def alphabets(self, default: Sequence[Tuple[int, int]]) -> List[Tuple[int, int]]:
        if self.m is None and self.n is None:
            return list(default)
        return [(self.m if self.m is not None else self.n, self.n if self.n is not None else self.m)]


def _p(lam) -> str:
    return "(" + ",".join(map(str, lam)) + ")"


# -- symmetric-function identities ---------------------------------------------

def _h_from_power_sums(k: int) -> SymFunc:
    return SymFunc("p", {lam: Fraction(1, zee(lam)) for lam in partitions_of(k)})


def identities_sec2(cfg: SuiteConfig = SuiteConfig()) -> Report:
    """Symmetric-function identities followed by the Hall-Littlewood duality checks."""
    rep = symmetric_identities(cfg)
    rep.extend(hl_duality(SuiteConfig(r=min(cfg.degree(5), 5))))
    return rep


def symmetric_identities(cfg: SuiteConfig = SuiteConfig()) -> Report:
    rep = Report()
    top = cfg.degree(6)

    # h_k(x/y) from the series against the power-sum expansion
    for m, n in cfg.alphabets([(2, 2)]):
        for k in range(1, top + 1):
            rep.add(f"h-power-sum k={k} m={m} n={n}",
                    super_gen("h", k, m, n) == specialize_super(_h_from_power_sums(k), m, n))

    # h-determinant against the two-alphabet Schur sum
    for m, n in cfg.alphabets([(3, 3)]):
        for r in range(1, min(top, 5) + 1):
            for lam in partitions_of(r):
                rep.add(f"jacobi-trudi=cancel lam={_p(lam)} m={m} n={n}",
                        super_schur(lam, m, n, "jacobi_trudi") == super_schur(lam, m, n, "cancel"))

    # skew row shapes
    t = T
    for r in range(1, top + 1):
        for nv in range(1, 4):
            row = hl_P_concrete((r,), nv, t)
            for k in range(0, r + 1):
                got = hl_skew_P((r,), (k,), nv, t)
                if k == 0:
                    want = row
                elif k == r:
                    want = Poly.constant(nv)
                else:
                    want = hl_P_concrete((r - k,), nv, t).scale(ONE - t)
                rep.add(f"skew-row r={r} k={k} vars={nv}", got == want)
                if 0 < k < r:
                    mono = Poly(nv)
                    for nu in partitions_of(r - k):
                        mono = mono + monomial_poly(nu, nv).scale((ONE - t) ** len(nu))
                    rep.add(f"skew-row-monomial r={r} k={k} vars={nv}", got == mono)

    # omega on the one-row function
    for r in range(1, top + 1):
        image = omega(hl_P((r,), t))
        for nv in range(1, 4):
            lhs = specialize(image, nv)
            rhs = (hl_P_concrete((r,), nv, t ** -1)
                   .scale_variables([t] * nv)
                   .scale(t ** -1 * (-1) ** (r - 1)))
            rep.add(f"omega-row r={r} vars={nv}", lhs == rhs)

    # one-row super HL function
    for m, n in cfg.alphabets([(2, 2)]):
        rep.add(f"super-P-empty m={m} n={n}", super_hl_P((), m, n, t) == SuperPoly.one(m, n))
        for r in range(1, top + 1):
            rep.add(f"super-P-row r={r} m={m} n={n}",
                    super_hl_P((r,), m, n, t).scale(ONE - t) == super_gen("q_row", r, m, n, t))

    # character expansion of super Schur functions
    for m, n in cfg.alphabets([(3, 3)]):
        for r in range(1, min(top, 5) + 1):
            for lam in partitions_of(r):
                rep.add(f"schur=characters lam={_p(lam)} m={m} n={n}",
                        super_schur(lam, m, n) == specialize_super(schur_from_characters(lam), m, n))

    rep.add("hook-vanishing lam=(2,2) m=1 n=1", not super_schur((2, 2), 1, 1))
    return rep


def hl_duality(cfg: SuiteConfig = SuiteConfig()) -> Report:
    rep = Report()
    top = cfg.degree(5)
    for d in range(1, top + 1):
        keys = partitions_of(d)
        ok_q = ok_p = True
        for lam in keys:
            q_lam = hl_q_lambda(lam, T)
            p_lam = hl_P(lam, T)
            for mu in keys:
                want = 1 if lam == mu else 0
                ok_q &= inner_hl(q_lam, basis_element("m", mu), T) == want
                ok_p &= inner_hl(p_lam, hl_Q(mu, T), T) == want
        rep.add(f"q-m duality degree={d}", ok_q)
        rep.add(f"P-Q duality degree={d}", ok_p)
    return rep


# -- tensor-space suites -------------------------------------------------------

def hecke_suite(cfg: SuiteConfig = SuiteConfig()) -> Report:
    rep = Report()
    for m, n in cfg.alphabets([(1, 1), (2, 2)]):
        for r in range(2, cfg.degree(4) + 1):
            rel = hecke_relations(r, m, n)
            for name in ("H1", "H2", "H3"):
                rep.add(f"{name} r={r} m={m} n={n}", rel[name])
            rep.add(f"D-commutes r={r} m={m} n={n}", d_commutes(r, m, n))
    return rep


def _z_product(polys: Sequence[Poly], nvars: int) -> Poly:
    out = Poly.constant(nvars)
    for p in polys:
        out = out * p
    return out


def prop51_suite(cfg: SuiteConfig = SuiteConfig()) -> Report:
    rep = Report()
    grid = cfg.alphabets([(1, 1), (2, 1), (2, 2)])
    top = cfg.degree(6)
    for m, n in grid:
        for k in range(1, top + 1):
            tr = trace_d_pi(gamma_word((k,)), k, m, n, jobs=cfg.jobs)
            rep.add(f"closed-form k={k} m={m} n={n}", prop51_trace(k, m, n) == tr)
            lhs = xy_substitute(tr, m, n)
            rhs = super_gen("q_row", k, m, n, Q ** -2).scale(Q ** k).div_scalar_exact(QMINUS)
            rep.add(f"row-trace=q-row k={k} m={m} n={n}", lhs == rhs)
            at_one = lhs.map_coefficients(lambda c: LaurentScalar.const(c.evaluate(1)))
            rep.add(f"row-trace-q1=power-sum k={k} m={m} n={n}", at_one == power_sum_super(k, m, n))

    # block factorization over compositions
    for m, n in grid:
        size = m + n
        for r in range(1, min(top, 5) + 1):
            for alpha in compositions_of(r):
                tr = trace_d_pi(gamma_word(alpha), r, m, n, jobs=cfg.jobs)
                blocks = [trace_d_pi(gamma_word((a,)), a, m, n) for a in alpha]
                ok = tr == _z_product(blocks, size)
                sorted_tr = trace_d_pi(gamma_word(tuple(sorted(alpha, reverse=True))), r, m, n, jobs=cfg.jobs)
                rep.add(f"factorization alpha={_p(alpha)} m={m} n={n}", ok)
                rep.add(f"order-independence alpha={_p(alpha)} m={m} n={n}", tr == sorted_tr)

    # the tilde-q forms and the two-alphabet reconstruction
    for k in range(0, min(top, 5) + 1):
        for nv in (1, 2, 3):
            rep.add(f"tilde-q forms k={k} vars={nv}",
                    specialize(hl_tilde_q(k), nv) == specialize(hl_tilde_q_definition(k), nv))
    neg_inv = -(Q ** -1)
    for m, n in cfg.alphabets([(2, 2)]):
        for k in range(1, min(top, 4) + 1):
            acc = SuperPoly(m, n)
            for j in range(k + 1):
                left = embed_x(specialize(hl_tilde_q(j), m), m, n)
                right = specialize(hl_tilde_q(k - j), n).map_coefficients(lambda c: c.subs_laurent(neg_inv))
                acc = acc + left * embed_y(right, m, n).flip_y()
            lhs = acc.div_scalar_exact(QMINUS)
            rep.add(f"two-alphabet reconstruction k={k} m={m} n={n}",
                    lhs == xy_substitute(prop51_trace(k, m, n), m, n))
    return rep


def frobenius_suite(cfg: SuiteConfig = SuiteConfig()) -> Report:
    rep = Report()
    top = cfg.degree(5)
    for m, n in cfg.alphabets([(3, 3)]):
        for r in range(1, top + 1):
            rep.extend(verify_super_frobenius(r, m, n, jobs=cfg.jobs))
    return rep


def q1_suite(cfg: SuiteConfig = SuiteConfig()) -> Report:
    rep = Report()
    for r in range(1, cfg.degree(6) + 1):
        table = char_table(r)
        keys = partitions_of(r)
        rep.add(f"integral r={r}", all(v.has_integer_coefficients() for v in table.rows.values()))
        rep.add(f"q1=murnaghan-nakayama r={r}", mn_table_matches(table))
        ones = (1,) * r
        rep.add(f"identity column r={r}",
                all(table.value(lam, ones) == count_standard_tableaux(lam) for lam in keys))
        row_ok = all(table.value((r,), mu) == Q ** (r - len(mu)) for mu in keys)
        col_ok = all(table.value(ones, mu) == (-(Q ** -1)) ** (r - len(mu)) for mu in keys)
        rep.add(f"trivial row r={r}", row_ok)
        rep.add(f"sign row r={r}", col_ok)
        neg = -(Q ** -1)
        rep.add(f"conjugation duality r={r}",
                all(table.value(conjugate(lam), mu) == table.value(lam, mu).subs_laurent(neg)
                    for lam in keys for mu in keys))
    return rep


_RUNNERS: Dict[str, Callable[[SuiteConfig], Report]] = {
    "identities-sec2": identities_sec2,
    "hecke-relations": hecke_suite,
    "prop51": prop51_suite,
    "frobenius": frobenius_suite,
    "q1-specialization": q1_suite,
}


def run_suite(name: str, cfg: SuiteConfig = SuiteConfig()) -> Report:
    if name == "all":
        rep = Report()
        for key in _RUNNERS:
            rep.extend(_RUNNERS[key](cfg))
        return rep
    try:
        runner = _RUNNERS[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    return runner(cfg)
