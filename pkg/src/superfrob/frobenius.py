"""Hecke algebra characters from the super Frobenius formula.

``F_mu = q^{|mu|} (q - q^-1)^{-l(mu)} q_mu(.;q^-2)`` expands in Schur
functions with the character values ``chi^lam(T_{gamma_mu})`` as
coefficients. Values are extracted abstractly with the Hall inner product;
the tensor-space trace is kept as an independent check.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Sequence, Tuple

from .heckesim import gamma_word, trace_d_pi, xy_substitute
from .hl import hl_q_lambda
from .partition import Partition, as_partition, hook_set, partitions_of
from .scalar import Q, LaurentScalar, NotDivisible, ScalarFraction, parse_laurent
from .superring import combine_schur, specialize_super, super_schur_expand
from .symring import SizeMismatch, SymFunc, basis_element, inner_standard, mn_character

QMINUS = Q - Q ** -1


def frobenius_element(mu: Sequence[int]) -> SymFunc:
    mu = as_partition(mu)
    if not mu:
        raise ValueError("frobenius_element needs a nonempty partition")
    scale = ScalarFraction(Q ** sum(mu), QMINUS ** len(mu))
    return hl_q_lambda(mu, Q ** -2).scale(scale)


def char_value(lam: Sequence[int], mu: Sequence[int]) -> LaurentScalar:
    """``chi^lam(T_{gamma_mu}) = <F_mu, s_lam>``; raises :class:`NotDivisible` if not Laurent."""
    lam, mu = as_partition(lam), as_partition(mu)
    if sum(lam) != sum(mu):
        raise SizeMismatch(f"|{lam}| != |{mu}|")
    val = inner_standard(frobenius_element(mu), basis_element("s", lam))
    if not val.is_laurent():
        raise NotDivisible(f"chi^{lam}(T_gamma{mu}) = {val} is not a Laurent polynomial")
    return val.num


@dataclass
class HeckeCharTable:
    r: int
    rows: Dict[Tuple[Partition, Partition], LaurentScalar] = field(default_factory=dict)

    @property
    def partitions(self) -> List[Partition]:
        return partitions_of(self.r)

    def value(self, lam, mu) -> LaurentScalar:
        return self.rows[(as_partition(lam), as_partition(mu))]

    def row(self, lam) -> List[LaurentScalar]:
        return [self.value(lam, mu) for mu in self.partitions]

    def column(self, mu) -> List[LaurentScalar]:
        return [self.value(lam, mu) for lam in self.partitions]

    def __eq__(self, other):
        if not isinstance(other, HeckeCharTable):
            return NotImplemented
        return self.r == other.r and self.rows == other.rows

    def to_json(self) -> dict:
        keys = self.partitions
        return {
            "r": self.r,
            "columns": [list(mu) for mu in keys],
            "rows": [{"lambda": list(lam), "values": [str(v) for v in self.row(lam)]} for lam in keys],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "HeckeCharTable":
        cols = [as_partition(c) for c in data["columns"]]
        rows = {}
        for row in data["rows"]:
            lam = as_partition(row["lambda"])
            for mu, v in zip(cols, row["values"]):
                rows[(lam, mu)] = parse_laurent(v)
        return cls(r=data["r"], rows=rows)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        keys = self.partitions
        w.writerow(["lambda"] + [_fmt_part(mu) for mu in keys])
        for lam in keys:
            w.writerow([_fmt_part(lam)] + [str(v) for v in self.row(lam)])
        return buf.getvalue()

    def to_text(self) -> str:
        keys = self.partitions
        header = ["lambda \\ mu"] + [_fmt_part(mu) for mu in keys]
        body = [[_fmt_part(lam)] + [str(v) for v in self.row(lam)] for lam in keys]
        widths = [max(len(r[i]) for r in [header] + body) for i in range(len(header))]
        lines = ["  ".join(c.rjust(wd) for c, wd in zip(r, widths)) for r in [header] + body]
        return "\n".join(lines) + "\n"


def _fmt_part(lam: Sequence[int]) -> str:
    return "(" + ",".join(map(str, lam)) + ")"


def char_table(r: int) -> HeckeCharTable:
    if r < 1:
        raise ValueError("r must be at least 1")
    keys = partitions_of(r)
    table = HeckeCharTable(r=r)
    for mu in keys:
        f = frobenius_element(mu)
        for lam in keys:
            val = inner_standard(f, basis_element("s", lam))
            if not val.is_laurent():
                raise NotDivisible(f"chi^{lam}(T_gamma{mu}) = {val} is not a Laurent polynomial")
            table.rows[(lam, mu)] = val.num
    return table


def specialize_table_q1(table: HeckeCharTable) -> Dict[Tuple[Partition, Partition], int]:
    out = {}
    for key, v in table.rows.items():
        val = v.evaluate(1)
        if val.denominator != 1:
            raise ValueError(f"q=1 value {val} at {key} is not an integer")
        out[key] = int(val)
    return out


def mn_table_matches(table: HeckeCharTable) -> bool:
    vals = specialize_table_q1(table)
    return all(vals[(lam, mu)] == mn_character(lam, mu) for (lam, mu) in vals)


# -- verification against the tensor-space trace --------------------------------

@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        d = {"name": self.name, "passed": self.passed}
        if self.detail:
            d["detail"] = self.detail
        return d


@dataclass
class Report:
    checks: List[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), detail))

    def extend(self, other: "Report") -> None:
        self.checks.extend(other.checks)

    def to_json(self) -> dict:
        return {"checks": [c.to_json() for c in self.checks], "passed": self.passed}

    def to_text(self) -> str:
        lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.name}" + (f"  [{c.detail}]" if c.detail else "")
                 for c in self.checks]
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines) + "\n"


def verify_super_frobenius(r: int, m: int, n: int, jobs: int = 1) -> Report:
    """For each ``mu |- r`` compare the trace, the specialized ``F_mu`` and the Schur sum.

    When the ``(m, n)``-hook excludes some shapes the Schur sum runs over the
    hook set only (the other super Schur functions vanish).
    """
    report = Report()
    table = char_table(r)
    hooks = hook_set(m, n, r)
    for mu in partitions_of(r):
        lhs = xy_substitute(trace_d_pi(gamma_word(mu), r, m, n, jobs=jobs), m, n)
        frob = specialize_super(frobenius_element(mu), m, n)
        schur_sum = combine_schur({lam: table.value(lam, mu) for lam in hooks}, m, n)
        ok_a = lhs == frob
        ok_b = lhs == schur_sum
        detail = "" if ok_a and ok_b else f"trace={lhs}; frobenius={frob}; schur_sum={schur_sum}"
        report.add(f"r={r} m={m} n={n} mu={_fmt_part(mu)} trace=frobenius", ok_a, detail if not ok_a else "")
        report.add(f"r={r} m={m} n={n} mu={_fmt_part(mu)} trace=schur-sum", ok_b, detail if not ok_b else "")
        if len(hooks) == len(partitions_of(r)):
            try:
                exp = super_schur_expand(lhs, r).coefficients
                want = {lam: table.value(lam, mu) for lam in hooks if table.value(lam, mu)}
                report.add(f"r={r} m={m} n={n} mu={_fmt_part(mu)} schur-expansion=char-values", exp == want)
            except ArithmeticError as exc:
                report.add(f"r={r} m={m} n={n} mu={_fmt_part(mu)} schur-expansion=char-values", False, str(exc))
    return report
