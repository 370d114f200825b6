"""Sparse multivariate polynomials with :class:`LaurentScalar` coefficients.

Used for concrete Hall-Littlewood polynomials, supersymmetric polynomials
in ``x_1..x_m, y_1..y_n`` and the ``z``-weighted traces of the tensor
representation. Exponent tuples are fixed length ``nvars``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Callable, Dict, Iterable, Mapping, Sequence, Tuple

from .scalar import ONE, ZERO, LaurentScalar, NotDivisible, parse_laurent

Exp = Tuple[int, ...]


def _lift(c) -> LaurentScalar:
    if isinstance(c, LaurentScalar):
        return c
    return LaurentScalar.const(c)


class Poly:
    """Immutable sparse polynomial ``sum_e c_e x^e`` in ``nvars`` variables."""

    __slots__ = ("nvars", "_t")

    def __init__(self, nvars: int, terms: Mapping[Exp, object] | None = None):
        self.nvars = nvars
        t: Dict[Exp, LaurentScalar] = {}
        if terms:
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} has wrong length for {nvars} variables")
                c = _lift(c)
                if c:
                    t[e] = c
        self._t = t

    def _new(self, t: Dict[Exp, LaurentScalar]) -> "Poly":
        obj = object.__new__(type(self))
        obj.nvars = self.nvars
        obj._t = t
        self._copy_meta(obj)
        return obj

    def _copy_meta(self, obj) -> None:
        pass

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c=1) -> "Poly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Poly":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    # -- inspection -----------------------------------------------------
    @property
    def terms(self) -> Dict[Exp, LaurentScalar]:
        return dict(self._t)

    def items(self):
        return self._t.items()

    def coefficient(self, e: Sequence[int]) -> LaurentScalar:
        return self._t.get(tuple(e), ZERO)

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def __len__(self):
        return len(self._t)

    def degrees(self) -> set:
        return {sum(e) for e in self._t}

    def homogeneous_part(self, d: int) -> "Poly":
        return self._new({e: c for e, c in self._t.items() if sum(e) == d})

    # -- arithmetic -----------------------------------------------------
    def _check(self, other: "Poly"):
        if other.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, LaurentScalar)):
            other = self._new({(0,) * self.nvars: _lift(other)} if other else {})
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        t = dict(self._t)
        for e, c in other._t.items():
            v = t.get(e)
            if v is None:
                t[e] = c
            else:
                v = v + c
                if v:
                    t[e] = v
                else:
                    del t[e]
        return self._new(t)

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self._t.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Poly":
        c = _lift(c)
        if not c:
            return self._new({})
        if c == ONE:
            return self
        return self._new({e: v * c for e, v in self._t.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, LaurentScalar)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        t: Dict[Exp, LaurentScalar] = {}
        for e1, c1 in self._t.items():
            for e2, c2 in other._t.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = t.get(e)
                t[e] = c1 * c2 if v is None else v + c1 * c2
        return self._new({e: c for e, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = self._new({(0,) * self.nvars: ONE})
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, LaurentScalar)):
            other = self._new({(0,) * self.nvars: _lift(other)} if other else {})
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self._t == other._t

    def __hash__(self):
        return hash((self.nvars, frozenset(self._t.items())))

    def map_coefficients(self, f: Callable[[LaurentScalar], LaurentScalar]) -> "Poly":
        return self._new({e: c2 for e, c in self._t.items() if (c2 := f(c))})

    def div_scalar_exact(self, d: LaurentScalar) -> "Poly":
        return self._new({e: c.div_exact(d) for e, c in self._t.items()})

    def leading(self) -> Tuple[Exp, LaurentScalar]:
        e = max(self._t)
        return e, self._t[e]

    def div_exact(self, other: "Poly") -> "Poly":
        """Exact division in lex order; raises :class:`NotDivisible` on a remainder."""
        self._check(other)
        if not other._t:
            raise ZeroDivisionError("division by zero polynomial")
        le, lc = other.leading()
        rem = dict(self._t)
        quo: Dict[Exp, LaurentScalar] = {}
        others = [(e, c) for e, c in other._t.items() if e != le]
        while rem:
            e = max(rem)
            c = rem.pop(e)
            qe = tuple(a - b for a, b in zip(e, le))
            if any(x < 0 for x in qe):
                raise NotDivisible("multivariate division leaves a remainder")
            qc = c.div_exact(lc)
            quo[qe] = qc
            for oe, oc in others:
                te = tuple(a + b for a, b in zip(qe, oe))
                v = rem.get(te, ZERO) - qc * oc
                if v:
                    rem[te] = v
                else:
                    rem.pop(te, None)
        return self._new(quo)

    # -- variable maps --------------------------------------------------
    def permute(self, perm: Sequence[int]) -> "Poly":
        """Apply ``x_i -> x_{perm[i]}``."""
        t: Dict[Exp, LaurentScalar] = {}
        for e, c in self._t.items():
            ne = [0] * self.nvars
            for i, a in enumerate(e):
                ne[perm[i]] += a
            t[tuple(ne)] = c
        return self._new(t)

    def scale_variables(self, factors: Sequence[LaurentScalar]) -> "Poly":
        """Substitute ``x_i -> factors[i] * x_i``."""
        t: Dict[Exp, LaurentScalar] = {}
        for e, c in self._t.items():
            v = c
            for f, a in zip(factors, e):
                if a:
                    v = v * (f ** a)
            if v:
                t[e] = v
        return self._new(t)

    def negate_variables(self, idx: Iterable[int]) -> "Poly":
        idx = list(idx)
        return self._new({e: (-c if sum(e[i] for i in idx) % 2 else c) for e, c in self._t.items()})

    def embed(self, nvars: int, positions: Sequence[int]) -> Poly:
        """Re-home variable ``i`` at position ``positions[i]`` in a ``nvars``-variable ring."""
        t: Dict[Exp, LaurentScalar] = {}
        for e, c in self._t.items():
            ne = [0] * nvars
            for i, a in enumerate(e):
                ne[positions[i]] += a
            t[tuple(ne)] = c
        return Poly(nvars, t)

    def is_symmetric_in(self, idx: Sequence[int]) -> bool:
        idx = list(idx)
        for a, b in zip(idx, idx[1:]):
            perm = list(range(self.nvars))
            perm[a], perm[b] = perm[b], perm[a]
            if self.permute(perm) != self:
                return False
        return True

    def subs_coefficients_power(self, k: int) -> "Poly":
        return self.map_coefficients(lambda c: c.subs_power(k))

    # -- text -----------------------------------------------------------
    def _var_names(self):
        return [f"x{i + 1}" for i in range(self.nvars)]

    def __str__(self):
        if not self._t:
            return "0"
        names = self._var_names()
        parts = []
        for e in sorted(self._t, reverse=True):
            mono = "*".join(
                n if a == 1 else f"{n}^{a}" for n, a in zip(names, e) if a
            )
            c = self._t[e]
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    def __repr__(self):
        return f"{type(self).__name__}({self.nvars}, {str(self)!r})"

    def to_json(self) -> dict:
        return {
            "nvars": self.nvars,
            "terms": [{"e": list(e), "coeff": str(self._t[e])} for e in sorted(self._t)],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Poly":
        return cls(data["nvars"], {tuple(t["e"]): parse_laurent(t["coeff"]) for t in data["terms"]})


def symmetrize_antisymmetric(base: Poly) -> Poly:
    """``sum_w sign(w) w(base)`` over all permutations of the variables."""
    from .partition import permutation_sign

    acc: Dict[Exp, LaurentScalar] = {}
    n = base.nvars
    for w in permutations(range(n)):
        sgn = permutation_sign(w)
        for e, c in base.items():
            ne = [0] * n
            for i, a in enumerate(e):
                ne[w[i]] = a
            ne = tuple(ne)
            v = acc.get(ne, ZERO)
            acc[ne] = v + c if sgn > 0 else v - c
    return Poly(n, {e: c for e, c in acc.items() if c})


def vandermonde(nvars: int) -> Poly:
    out = Poly.constant(nvars)
    for i in range(nvars):
        for j in range(i + 1, nvars):
            out = out * (Poly.variable(nvars, i) - Poly.variable(nvars, j))
    return out


def divide_by_vandermonde(p: Poly) -> Poly:
    n = p.nvars
    out = p
    for i in range(n):
        for j in range(i + 1, n):
            out = out.div_exact(Poly.variable(n, i) - Poly.variable(n, j))
    return out
