"""The ring of symmetric functions over ``Q(q)``.

Elements carry a basis tag (``p``, ``m``, ``e``, ``h``, ``s``) and a sparse
map from partitions to :class:`ScalarFraction` coefficients. Every
conversion routes through the power sums, where the transition matrices
have rational entries and are cached per degree.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .partition import Partition, as_partition, kostka, partitions_of, zee
from .scalar import FZERO, LaurentScalar, ScalarFraction, parse_fraction

BASES = ("p", "m", "e", "h", "s")

Matrix = Dict[Partition, Dict[Partition, Fraction]]


class SizeMismatch(ValueError):
    pass


class SingularTransition(ArithmeticError):
    pass


def _sf(c) -> ScalarFraction:
    if isinstance(c, ScalarFraction):
        return c
    return ScalarFraction._coerce(c)


def _sort(parts: Iterable[int]) -> Partition:
    return tuple(sorted(parts, reverse=True))


# -- transition matrices (basis element -> p-expansion), rational entries ----

def _p_product(a: Mapping[Partition, Fraction], b: Mapping[Partition, Fraction]) -> Dict[Partition, Fraction]:
    out: Dict[Partition, Fraction] = defaultdict(Fraction)
    for la, ca in a.items():
        for lb, cb in b.items():
            out[_sort(la + lb)] += ca * cb
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _h_row(k: int) -> Tuple[Tuple[Partition, Fraction], ...]:
    return tuple((nu, Fraction(1, zee(nu))) for nu in partitions_of(k))


@lru_cache(maxsize=None)
def _e_row(k: int) -> Tuple[Tuple[Partition, Fraction], ...]:
    return tuple((nu, Fraction((-1) ** (k - len(nu)), zee(nu))) for nu in partitions_of(k))


def _multiplicative(lam: Partition, row) -> Dict[Partition, Fraction]:
    acc: Dict[Partition, Fraction] = {(): Fraction(1)}
    for part in lam:
        acc = _p_product(acc, dict(row(part)))
    return acc


@lru_cache(maxsize=None)
def _power_in_monomial(mu: Partition) -> Dict[Partition, int]:
    """Coefficient of ``m_lam`` in ``p_mu``: ways to distribute the parts of ``mu`` into rows summing to ``lam``."""
    r = sum(mu)
    out: Dict[Partition, int] = {}
    for lam in partitions_of(r):
        if len(lam) > len(mu):
            continue
        out_val = _distribute(tuple(mu), tuple(lam))
        if out_val:
            out[lam] = out_val
    return out


@lru_cache(maxsize=None)
def _distribute(parts: Tuple[int, ...], slots: Tuple[int, ...]) -> int:
    if not parts:
        return 1 if all(s == 0 for s in slots) else 0
    first, rest = parts[0], parts[1:]
    total = 0
    for j, s in enumerate(slots):
        if s >= first:
            total += _distribute(rest, slots[:j] + (s - first,) + slots[j + 1 :])
    return total


def _invert(mat: Matrix, keys: List[Partition]) -> Matrix:
    n = len(keys)
    idx = {k: i for i, k in enumerate(keys)}
    a = [[Fraction(0)] * n + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for k, row in mat.items():
        for k2, v in row.items():
            a[idx[k]][idx[k2]] = v
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise SingularTransition("transition matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return {keys[i]: {keys[j]: a[i][n + j] for j in range(n) if a[i][n + j]} for i in range(n)}


@lru_cache(maxsize=None)
def to_p_matrix(basis: str, d: int) -> Matrix:
    """Rows: basis elements of degree ``d``; entries: their power-sum coefficients."""
    keys = partitions_of(d)
    if basis == "p":
        return {lam: {lam: Fraction(1)} for lam in keys}
    if basis == "h":
        return {lam: _multiplicative(lam, _h_row) for lam in keys}
    if basis == "e":
        return {lam: _multiplicative(lam, _e_row) for lam in keys}
    if basis == "m":
        p_in_m = {mu: {lam: Fraction(c) for lam, c in _power_in_monomial(mu).items()} for mu in keys}
        return _invert(p_in_m, keys)
    if basis == "s":
        m_to_p = to_p_matrix("m", d)
        out: Matrix = {}
        for lam in keys:
            row: Dict[Partition, Fraction] = defaultdict(Fraction)
            for mu in keys:
                k = kostka(lam, mu)
                if k:
                    for nu, v in m_to_p[mu].items():
                        row[nu] += k * v
            out[lam] = {k2: v for k2, v in row.items() if v}
        return out
    raise ValueError(f"unknown basis {basis!r}")


@lru_cache(maxsize=None)
def from_p_matrix(basis: str, d: int) -> Matrix:
    """Rows: ``p_mu``; entries: coefficients in the target basis."""
    return _invert(to_p_matrix(basis, d), partitions_of(d))


# -- the element type ------------------------------------------------------

class SymFunc:
    """A symmetric function in a declared basis."""

    __slots__ = ("basis", "_t")

    def __init__(self, basis: str, terms: Mapping[Sequence[int], object] | None = None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        t: Dict[Partition, ScalarFraction] = {}
        for lam, c in (terms or {}).items():
            lam = as_partition(lam)
            c = _sf(c)
            if c:
                t[lam] = t[lam] + c if lam in t else c
                if not t[lam]:
                    del t[lam]
        self._t = t

    @classmethod
    def _raw(cls, basis: str, t: Dict[Partition, ScalarFraction]) -> "SymFunc":
        obj = cls.__new__(cls)
        obj.basis = basis
        obj._t = t
        return obj

    @property
    def terms(self) -> Dict[Partition, ScalarFraction]:
        return dict(self._t)

    def items(self):
        return self._t.items()

    def coefficient(self, lam: Sequence[int]) -> ScalarFraction:
        return self._t.get(as_partition(lam), FZERO)

    def is_zero(self) -> bool:
        return not self._t

    def degrees(self) -> List[int]:
        return sorted({sum(lam) for lam in self._t})

    @property
    def degree(self):
        ds = self.degrees()
        if not ds:
            return 0
        return ds[0] if len(ds) == 1 else "mixed"

    def homogeneous_part(self, d: int) -> "SymFunc":
        return SymFunc._raw(self.basis, {k: v for k, v in self._t.items() if sum(k) == d})

    # -- conversion -----------------------------------------------------
    def to_p(self) -> "SymFunc":
        if self.basis == "p":
            return self
        acc: Dict[Partition, ScalarFraction] = {}
        for lam, c in self._t.items():
            for mu, v in to_p_matrix(self.basis, sum(lam))[lam].items():
                acc[mu] = acc.get(mu, FZERO) + c * v
        return SymFunc._raw("p", {k: v for k, v in acc.items() if v})

    def convert(self, target: str) -> "SymFunc":
        if target == self.basis:
            return self
        f = self.to_p()
        if target == "p":
            return f
        acc: Dict[Partition, ScalarFraction] = {}
        for mu, c in f._t.items():
            for lam, v in from_p_matrix(target, sum(mu))[mu].items():
                acc[lam] = acc.get(lam, FZERO) + c * v
        return SymFunc._raw(target, {k: v for k, v in acc.items() if v})

    # -- ring operations ------------------------------------------------
    def _coerce(self, other) -> "SymFunc":
        if isinstance(other, SymFunc):
            return other
        if isinstance(other, (int, Fraction, LaurentScalar, ScalarFraction)):
            return SymFunc("p", {(): other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        basis = self.basis if self.basis == other.basis else "p"
        a, b = self.convert(basis), other.convert(basis)
        t = dict(a._t)
        for k, v in b._t.items():
            s = t.get(k, FZERO) + v
            if s:
                t[k] = s
            else:
                t.pop(k, None)
        return SymFunc._raw(basis, t)

    __radd__ = __add__

    def __neg__(self):
        return SymFunc._raw(self.basis, {k: -v for k, v in self._t.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "SymFunc":
        c = _sf(c)
        if not c:
            return SymFunc._raw(self.basis, {})
        return SymFunc._raw(self.basis, {k: v * c for k, v in self._t.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, LaurentScalar, ScalarFraction)):
            return self.scale(other)
        if not isinstance(other, SymFunc):
            return NotImplemented
        # p, e, h are multiplicative: products are partition unions
        basis = self.basis if self.basis == other.basis and self.basis in "peh" else "p"
        a, b = self.convert(basis), other.convert(basis)
        acc: Dict[Partition, ScalarFraction] = {}
        for la, ca in a._t.items():
            for lb, cb in b._t.items():
                k = _sort(la + lb)
                acc[k] = acc.get(k, FZERO) + ca * cb
        return SymFunc._raw(basis, {k: v for k, v in acc.items() if v})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = SymFunc("p", {(): 1})
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.basis == other.basis:
            return self._t == other._t
        return self.to_p()._t == other.to_p()._t

    def __hash__(self):
        return hash(frozenset(self.to_p()._t.items()))

    def map_coefficients(self, f) -> "SymFunc":
        return SymFunc._raw(self.basis, {k: v2 for k, v in self._t.items() if (v2 := f(v))})

    def subs_power(self, k: int) -> "SymFunc":
        """Apply ``q -> q^k`` to every coefficient."""
        return self.map_coefficients(lambda c: c.subs_power(k))

    # -- text / json ----------------------------------------------------
    def __str__(self):
        if not self._t:
            return "0"
        parts = []
        for lam in sorted(self._t, key=lambda p: (sum(p), p), reverse=True):
            name = f"{self.basis}[{','.join(map(str, lam))}]"
            parts.append(f"({self._t[lam]})*{name}")
        return " + ".join(parts)

    def __repr__(self):
        return f"SymFunc({self.basis!r}, {str(self)!r})"

    def to_json(self) -> dict:
        keys = sorted(self._t, key=lambda p: (sum(p), p), reverse=True)
        return {
            "basis": self.basis,
            "terms": [{"partition": list(k), "coeff": str(self._t[k])} for k in keys],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SymFunc":
        return cls(data["basis"], {tuple(t["partition"]): parse_fraction(t["coeff"]) for t in data["terms"]})


def basis_element(basis: str, lam: Sequence[int], coeff=1) -> SymFunc:
    return SymFunc(basis, {as_partition(lam): coeff})


def p(*lam: int) -> SymFunc:
    return basis_element("p", lam)


def m(*lam: int) -> SymFunc:
    return basis_element("m", lam)


def e(*lam: int) -> SymFunc:
    return basis_element("e", lam)


def h(*lam: int) -> SymFunc:
    return basis_element("h", lam)


def s(*lam: int) -> SymFunc:
    return basis_element("s", lam)


def convert(f: SymFunc, target: str) -> SymFunc:
    return f.convert(target)


def omega(f: SymFunc) -> SymFunc:
    """The involution ``p_r -> (-1)^{r-1} p_r``, returned in ``f``'s basis."""
    g = f.to_p()
    t = {lam: (-c if (sum(lam) - len(lam)) % 2 else c) for lam, c in g.items()}
    return SymFunc._raw("p", t).convert(f.basis)


def inner_standard(f: SymFunc, g: SymFunc) -> ScalarFraction:
    """``<p_lam, p_mu> = delta * z_lam``; components of different degree pair to zero."""
    a, b = f.to_p(), g.to_p()
    out = FZERO
    for lam, c in a.items():
        d = b._t.get(lam)
        if d is not None:
            out = out + c * d * zee(lam)
    return out


def solve_linear(rows: List[List[ScalarFraction]], rhs: List[ScalarFraction]) -> List[ScalarFraction]:
    """Solve a square system over ``Q(q)`` by Gaussian elimination."""
    n = len(rows)
    a = [list(r) + [b] for r, b in zip(rows, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise SingularTransition("singular system")
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]


MAX_HL_DEGREE = 10


def inner_hl(f: SymFunc, g: SymFunc, t) -> ScalarFraction:
    """The form making ``q_lam(.;t)`` and ``m_mu`` dual bases.

    ``f`` is expanded in the ``q_lam(.;t)`` basis by a linear solve, ``g`` in
    the monomial basis, and the coefficients are paired.
    """
    from .hl import hl_q_lambda

    t = _sf(t)
    a, b = f.to_p(), g.convert("m")
    out = FZERO
    for d in sorted(set(a.degrees()) & set(b.degrees())):
        if d > MAX_HL_DEGREE:
            raise SingularTransition(f"degree {d} exceeds the configured bound {MAX_HL_DEGREE}")
        keys = partitions_of(d)
        cols = {lam: hl_q_lambda(lam, t).to_p() for lam in keys}
        # rows indexed by p_nu, columns by q_lam
        rows = [[cols[lam].coefficient(nu) for lam in keys] for nu in keys]
        rhs = [a.coefficient(nu) for nu in keys]
        coeffs = solve_linear(rows, rhs)
        for lam, c in zip(keys, coeffs):
            out = out + c * b.coefficient(lam)
    return out


# -- symmetric group characters --------------------------------------------

def _beta(lam: Partition, length: int) -> Tuple[int, ...]:
    lam = tuple(lam) + (0,) * (length - len(lam))
    return tuple(lam[i] + length - 1 - i for i in range(length))


def _from_beta(beads: Iterable[int]) -> Partition:
    b = sorted(beads, reverse=True)
    n = len(b)
    return as_partition([b[i] - (n - 1 - i) for i in range(n)])


@lru_cache(maxsize=None)
def _mn(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1 if not lam else 0
    k, rest = mu[0], mu[1:]
    beads = set(_beta(lam, len(lam)))
    total = 0
    for b in beads:
        if b - k >= 0 and (b - k) not in beads:
            # height of the removed border strip = beads jumped over
            height = sum(1 for c in beads if b - k < c < b)
            new = (beads - {b}) | {b - k}
            total += (-1) ** height * _mn(_from_beta(new), rest)
    return total


def mn_character(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Irreducible character of the symmetric group, shape ``lam``, at cycle type ``mu``.

    Border-strip (Murnaghan-Nakayama) recursion on beta-numbers.
    """
    lam, mu = as_partition(lam), as_partition(mu)
    if sum(lam) != sum(mu):
        raise SizeMismatch(f"|{lam}| != |{mu}|")
    return _mn(lam, mu)


def mn_table(r: int) -> Dict[Tuple[Partition, Partition], int]:
    return {(lam, mu): mn_character(lam, mu) for lam in partitions_of(r) for mu in partitions_of(r)}


def schur_from_characters(lam: Sequence[int]) -> SymFunc:
    """``sum_mu chi^lam(mu) p_mu / z_mu`` built from the character oracle."""
    r = sum(lam)
    return SymFunc("p", {mu: Fraction(mn_character(lam, mu), zee(mu)) for mu in partitions_of(r)})


def jacobi_trudi_h(lam: Sequence[int]) -> SymFunc:
    """``det[h_{lam_i - i + j}]`` expanded by permutations, in the h-basis."""
    from itertools import permutations as perms

    from .partition import permutation_sign

    lam = as_partition(lam)
    n = len(lam)
    acc: Dict[Partition, int] = defaultdict(int)
    for w in perms(range(n)):
        idx = [lam[i] - i + w[i] for i in range(n)]
        if any(x < 0 for x in idx):
            continue
        acc[_sort(x for x in idx if x > 0)] += permutation_sign(w)
    return SymFunc("h", {k: v for k, v in acc.items() if v})
