"""Exact scalars: Laurent polynomials in ``q`` over the rationals and their fractions.

Everything downstream works over ``Q[q, q^-1]`` or its fraction field, so the
two classes here are the coefficient domain for the whole package.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Tuple, Union

__all__ = [
    "LaurentScalar",
    "ScalarFraction",
    "NotDivisible",
    "ZeroSubstitution",
    "Q",
    "ONE",
    "ZERO",
    "laurent",
    "frac_normalize",
    "parse_laurent",
    "parse_fraction",
]

Number = Union[int, Fraction]


class NotDivisible(ArithmeticError):
    """Exact division left a nonzero remainder."""


class ZeroSubstitution(ValueError):
    """``q -> 0`` is undefined on Laurent polynomials."""


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"not an exact rational: {c!r}")


class LaurentScalar:
    """Sparse Laurent polynomial ``sum c_e q^e`` with rational ``c_e``.

    Instances are immutable; zero coefficients are never stored.
    """

    __slots__ = ("_t", "_hash")

    def __init__(self, terms: Mapping[int, Number] | None = None):
        t: Dict[int, Fraction] = {}
        if terms:
            for e, c in terms.items():
                c = _frac(c)
                if c:
                    t[int(e)] = c
        self._t = t
        self._hash = None

    @classmethod
    def _raw(cls, t: Dict[int, Fraction]) -> "LaurentScalar":
        obj = cls.__new__(cls)
        obj._t = t
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: Number) -> "LaurentScalar":
        c = _frac(c)
        return cls._raw({0: c} if c else {})

    @classmethod
    def monomial(cls, e: int, c: Number = 1) -> "LaurentScalar":
        c = _frac(c)
        return cls._raw({e: c} if c else {})

    # -- inspection -----------------------------------------------------
    @property
    def terms(self) -> Dict[int, Fraction]:
        return dict(self._t)

    def items(self):
        return self._t.items()

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def min_exp(self) -> int:
        return min(self._t)

    def max_exp(self) -> int:
        return max(self._t)

    def is_monomial(self) -> bool:
        return len(self._t) == 1

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self._t.get(0, Fraction(0))

    def has_integer_coefficients(self) -> bool:
        return all(c.denominator == 1 for c in self._t.values())

    # -- arithmetic -----------------------------------------------------
    @staticmethod
    def _coerce(other) -> "LaurentScalar":
        if isinstance(other, LaurentScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentScalar.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._t:
            return self
        if not self._t:
            return other
        t = dict(self._t)
        for e, c in other._t.items():
            v = t.get(e)
            if v is None:
                t[e] = c
            else:
                v += c
                if v:
                    t[e] = v
                else:
                    del t[e]
        return LaurentScalar._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return LaurentScalar._raw({e: -c for e, c in self._t.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _frac(other)
            if not other:
                return ZERO
            return LaurentScalar._raw({e: c * other for e, c in self._t.items()})
        if not isinstance(other, LaurentScalar):
            return NotImplemented
        if not self._t or not other._t:
            return ZERO
        t: Dict[int, Fraction] = {}
        for e1, c1 in self._t.items():
            for e2, c2 in other._t.items():
                e = e1 + e2
                t[e] = t.get(e, 0) + c1 * c2
        return LaurentScalar._raw({e: c for e, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial():
                raise NotDivisible(f"({self})^{k} is not a Laurent polynomial")
            (e, c), = self._t.items()
            return LaurentScalar._raw({e * k: c ** k})
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _frac(other)
            return LaurentScalar._raw({e: c / other for e, c in self._t.items()})
        if isinstance(other, LaurentScalar):
            return self.div_exact(other)
        return NotImplemented

    def div_exact(self, other: "LaurentScalar") -> "LaurentScalar":
        """Return ``c`` with ``c * other == self``; raise :class:`NotDivisible` otherwise."""
        if not other._t:
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if not self._t:
            return ZERO
        if len(other._t) == 1:
            (e, c), = other._t.items()
            return LaurentScalar._raw({k - e: v / c for k, v in self._t.items()})
        a_shift, a = _to_poly(self)
        b_shift, b = _to_poly(other)
        quo, rem = _poly_divmod(a, b)
        if any(rem):
            raise NotDivisible(f"({self}) / ({other}) leaves remainder")
        return _from_poly(quo, a_shift - b_shift)

    def __eq__(self, other):
        if isinstance(other, LaurentScalar):
            return self._t == other._t
        if isinstance(other, (int, Fraction)):
            return self._t == ({0: Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    # -- substitutions --------------------------------------------------
    def subs_power(self, k: int) -> "LaurentScalar":
        """Image under ``q -> q^k`` (``k != 0``)."""
        if k == 0:
            raise ValueError("power substitution requires k != 0")
        return LaurentScalar._raw({e * k: c for e, c in self._t.items()})

    def subs_laurent(self, value: "LaurentScalar") -> "LaurentScalar":
        """Image under ``q -> value``; negative powers need a monomial ``value``."""
        out = ZERO
        for e, c in self._t.items():
            out = out + (value ** e) * c
        return out

    def evaluate(self, value: Number) -> Fraction:
        value = _frac(value)
        if value == 0:
            raise ZeroSubstitution("cannot substitute q = 0 into a Laurent polynomial")
        return sum((c * value ** e for e, c in self._t.items()), Fraction(0))

    def subs(self, *, power: int | None = None, value: Number | None = None):
        if (power is None) == (value is None):
            raise ValueError("give exactly one of power= or value=")
        if power is not None:
            return self.subs_power(power)
        return self.evaluate(value)

    # -- text -----------------------------------------------------------
    def __str__(self) -> str:
        if not self._t:
            return "0"
        parts: List[str] = []
        for e in sorted(self._t, reverse=True):
            c = self._t[e]
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                mono = "q" if e == 1 else f"q^{e}"
                body = mono if a == 1 else f"{a}*{mono}"
            if not parts:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentScalar({str(self)!r})"

    def to_json(self) -> Dict[str, str]:
        return {str(e): str(c) for e, c in sorted(self._t.items())}

    @classmethod
    def from_json(cls, data: Mapping[str, str]) -> "LaurentScalar":
        return cls({int(e): Fraction(c) for e, c in data.items()})


ZERO = LaurentScalar()
ONE = LaurentScalar.const(1)
Q = LaurentScalar.monomial(1)


def laurent(terms: Mapping[int, Number] | Iterable[Tuple[int, Number]]) -> LaurentScalar:
    if not isinstance(terms, Mapping):
        acc: Dict[int, Fraction] = {}
        for e, c in terms:
            acc[e] = acc.get(e, 0) + _frac(c)
        terms = acc
    return LaurentScalar(terms)


# -- univariate polynomial helpers (coefficient lists, low degree first) ----

def _to_poly(a: LaurentScalar) -> Tuple[int, List[Fraction]]:
    lo, hi = a.min_exp(), a.max_exp()
    coeffs = [Fraction(0)] * (hi - lo + 1)
    for e, c in a.items():
        coeffs[e - lo] = c
    return lo, coeffs


def _from_poly(coeffs: List[Fraction], shift: int) -> LaurentScalar:
    return LaurentScalar._raw({i + shift: c for i, c in enumerate(coeffs) if c})


def _trim(p: List[Fraction]) -> List[Fraction]:
    while p and not p[-1]:
        p.pop()
    return p


def _poly_divmod(a: List[Fraction], b: List[Fraction]) -> Tuple[List[Fraction], List[Fraction]]:
    a = _trim(list(a))
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError
    if len(a) < len(b):
        return [], a
    lead = b[-1]
    quo = [Fraction(0)] * (len(a) - len(b) + 1)
    rem = list(a)
    for i in range(len(quo) - 1, -1, -1):
        c = rem[i + len(b) - 1] / lead
        quo[i] = c
        if c:
            for j, bj in enumerate(b):
                rem[i + j] -= c * bj
    return quo, _trim(rem[: len(b) - 1])


def _poly_gcd(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    a = _trim(list(a))
    b = _trim(list(b))
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if not a:
        return [Fraction(1)]
    lead = a[-1]
    return [c / lead for c in a]


# -- fractions -------------------------------------------------------------

class ScalarFraction:
    """Element of ``Q(q)`` kept as ``num / den`` in canonical form.

    ``den`` is a monic polynomial with nonzero constant term and is coprime
    to ``num``, so equality is component-wise.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, *, _normalized: bool = False):
        num = _as_laurent(num)
        den = ONE if den is None else _as_laurent(den)
        if not _normalized:
            num, den = _normalize_pair(num, den)
        self.num = num
        self.den = den
        self._hash = None

    @staticmethod
    def _coerce(other):
        if isinstance(other, ScalarFraction):
            return other
        if isinstance(other, (int, Fraction, LaurentScalar)):
            return ScalarFraction(_as_laurent(other), ONE, _normalized=True)
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_laurent(self) -> bool:
        return self.den == ONE

    def to_laurent(self) -> LaurentScalar:
        if self.den != ONE:
            raise NotDivisible(f"{self} is not a Laurent polynomial")
        return self.num

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            if self.den == ONE:
                return ScalarFraction(self.num + other.num, ONE, _normalized=True)
            return ScalarFraction(self.num + other.num, self.den)
        return ScalarFraction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return ScalarFraction(-self.num, self.den, _normalized=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return FZERO
            return ScalarFraction(self.num * other, self.den, _normalized=True)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == ONE and other.den == ONE:
            return ScalarFraction(self.num * other.num, ONE, _normalized=True)
        return ScalarFraction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by zero fraction")
        return ScalarFraction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, k: int):
        if k < 0:
            return ScalarFraction(self.den ** (-k), self.num ** (-k))
        return ScalarFraction(self.num ** k, self.den ** k, _normalized=True)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def subs_power(self, k: int) -> "ScalarFraction":
        return ScalarFraction(self.num.subs_power(k), self.den.subs_power(k))

    def evaluate(self, value: Number) -> Fraction:
        d = self.den.evaluate(value)
        if d == 0:
            raise ZeroDivisionError(f"denominator of {self} vanishes at q={value}")
        return self.num.evaluate(value) / d

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"ScalarFraction({str(self)!r})"


def _as_laurent(x) -> LaurentScalar:
    if isinstance(x, LaurentScalar):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentScalar.const(x)
    raise TypeError(f"cannot use {x!r} as a Laurent scalar")


def _normalize_pair(num: LaurentScalar, den: LaurentScalar) -> Tuple[LaurentScalar, LaurentScalar]:
    if not den:
        raise ZeroDivisionError("fraction with zero denominator")
    if not num:
        return ZERO, ONE
    d_shift, d = _to_poly(den)
    n_shift, n = _to_poly(num)
    shift = n_shift - d_shift
    if len(d) > 1 and len(n) > 1:
        g = _poly_gcd(n, d)
        if len(g) > 1:
            n, r1 = _poly_divmod(n, g)
            d, r2 = _poly_divmod(d, g)
            assert not r1 and not r2
    lead = d[-1]
    n = [c / lead for c in n]
    d = [c / lead for c in d]
    return _from_poly(n, shift), _from_poly(d, 0)


def frac_normalize(num, den) -> ScalarFraction:
    """Canonical ``num/den``: coprime, ``den`` monic with lowest exponent 0."""
    return ScalarFraction(num, den)


FZERO = ScalarFraction(ZERO, ONE, _normalized=True)
FONE = ScalarFraction(ONE, ONE, _normalized=True)


# -- parsing ---------------------------------------------------------------

_TERM = re.compile(
    r"""^(?P<coef>\d+(?:/\d+)?)?\s*\*?\s*(?P<q>q(?:\^\(?(?P<exp>-?\d+)\)?)?)?$"""
)


def parse_laurent(text: str) -> LaurentScalar:
    """Parse the canonical rendering, e.g. ``"q^2 - 1 + q^-2"`` or ``"3/2*q"``."""
    s = text.replace(" ", "").replace("**", "^")
    if not s:
        raise ValueError("empty Laurent expression")
    # split on +/- that are not part of an exponent
    tokens: List[str] = []
    cur = ""
    for i, ch in enumerate(s):
        if ch in "+-" and cur and not cur.endswith("^") and not cur.endswith("^("):
            tokens.append(cur)
            cur = ch
        else:
            cur += ch
    tokens.append(cur)
    acc: Dict[int, Fraction] = {}
    for tok in tokens:
        sign = 1
        while tok and tok[0] in "+-":
            if tok[0] == "-":
                sign = -sign
            tok = tok[1:]
        m = _TERM.match(tok)
        if not tok or not m or (m.group("coef") is None and m.group("q") is None):
            raise ValueError(f"cannot parse term {tok!r} in {text!r}")
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("q"):
            e = int(m.group("exp")) if m.group("exp") is not None else 1
        else:
            e = 0
        acc[e] = acc.get(e, 0) + sign * coef
    return LaurentScalar(acc)


def parse_fraction(text: str) -> ScalarFraction:
    """Parse ``"(num)/(den)"`` or a bare Laurent expression."""
    s = text.strip()
    m = re.fullmatch(r"\((.*)\)\s*/\s*\((.*)\)", s)
    if m and m.group(1).count("(") == m.group(1).count(")"):
        return ScalarFraction(parse_laurent(m.group(1)), parse_laurent(m.group(2)))
    return ScalarFraction(parse_laurent(s))
