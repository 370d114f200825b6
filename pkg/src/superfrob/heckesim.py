"""Sign q-permutation representation of the Hecke algebra on graded tensor space.

Basis vectors ``v_1..v_{m+n}``; ``v_k`` is even for ``k <= m`` and odd
otherwise. A tensor basis vector is an index word ``(i_1, ..., i_r)``.
The diagonal operator ``D_r`` weights a word by ``z^{c(i)}``, where
``c(i)`` counts occurrences of each index; traces are returned as
polynomials in ``z_1..z_{m+n}``.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from typing import Callable, Dict, Iterable, List, Mapping, Sequence, Tuple

from .partition import as_composition
from .poly import Poly
from .scalar import ONE, Q, ZERO, LaurentScalar, parse_laurent
from .superring import SuperPoly

Word = Tuple[int, ...]
TensorState = Dict[Word, LaurentScalar]
TwoSite = Callable[[int, int, int], List[Tuple[Tuple[int, int], LaurentScalar]]]

QMINUS = Q - Q ** -1


class IndexOutOfRange(IndexError):
    pass


def parity(k: int, m: int) -> int:
    return 0 if k <= m else 1


@dataclass(frozen=True)
class GradedIndex:
    value: int
    parity: int

    @classmethod
    def of(cls, value: int, m: int) -> "GradedIndex":
        return cls(value, parity(value, m))


def two_site(k: int, l: int, m: int) -> List[Tuple[Tuple[int, int], LaurentScalar]]:
    """Action of ``T`` on ``v_k ⊗ v_l``."""
    pk, pl = parity(k, m), parity(l, m)
    if k == l:
        # ((-1)^{|v_k|} (q + q^-1) + q - q^-1) / 2
        return [((k, k), Q if pk == 0 else -(Q ** -1))]
    sign = -1 if pk * pl else 1
    swapped = ((l, k), LaurentScalar.const(sign))
    if k < l:
        return [swapped, ((k, l), QMINUS)]
    return [swapped]


class ZPoly(Poly):
    """Polynomial in the content variables ``z_1..z_{m+n}``."""

    __slots__ = ()

    def _var_names(self):
        return [f"z{i + 1}" for i in range(self.nvars)]


def _check_index(i: int, r: int):
    if not 1 <= i <= r - 1:
        raise IndexOutOfRange(f"generator T_{i} does not exist for r = {r}")


def apply_generator(i: int, state: Mapping[Word, LaurentScalar], r: int, m: int, n: int,
                    site: TwoSite = two_site) -> TensorState:
    _check_index(i, r)
    out: TensorState = {}
    for word, amp in state.items():
        for (a, b), c in site(word[i - 1], word[i], m):
            new = word[: i - 1] + (a, b) + word[i + 1 :]
            v = out.get(new, ZERO) + amp * c
            if v:
                out[new] = v
            else:
                out.pop(new, None)
    return out


def apply_word(word: Sequence[int], state: Mapping[Word, LaurentScalar], r: int, m: int, n: int,
               site: TwoSite = two_site) -> TensorState:
    """Act by ``T_{w_1} T_{w_2} ... T_{w_k}``; the rightmost generator acts first."""
    for i in word:
        _check_index(i, r)
    cur = dict(state)
    for i in reversed(list(word)):
        cur = apply_generator(i, cur, r, m, n, site)
    return cur


def basis_words(r: int, m: int, n: int) -> Iterable[Word]:
    """Lexicographic order on index words."""
    return product(range(1, m + n + 1), repeat=r)


class TensorOperator:
    """Column-sparse operator on the ``(m+n)^r``-dimensional tensor space."""

    def __init__(self, r: int, m: int, n: int, columns: Mapping[Word, Mapping[Word, LaurentScalar]]):
        self.r, self.m, self.n = r, m, n
        self.columns = {w: dict(col) for w, col in columns.items() if col}

    @classmethod
    def identity(cls, r, m, n):
        return cls(r, m, n, {w: {w: ONE} for w in basis_words(r, m, n)})

    def apply(self, state: Mapping[Word, LaurentScalar]) -> TensorState:
        out: TensorState = {}
        for w, amp in state.items():
            for u, c in self.columns.get(w, {}).items():
                v = out.get(u, ZERO) + amp * c
                if v:
                    out[u] = v
                else:
                    out.pop(u, None)
        return out

    def __matmul__(self, other: "TensorOperator") -> "TensorOperator":
        return TensorOperator(self.r, self.m, self.n, {w: self.apply(col) for w, col in other.columns.items()})

    def __add__(self, other: "TensorOperator") -> "TensorOperator":
        cols: Dict[Word, TensorState] = {}
        for w in set(self.columns) | set(other.columns):
            col = dict(self.columns.get(w, {}))
            for u, c in other.columns.get(w, {}).items():
                v = col.get(u, ZERO) + c
                if v:
                    col[u] = v
                else:
                    col.pop(u, None)
            cols[w] = col
        return TensorOperator(self.r, self.m, self.n, cols)

    def scale(self, c: LaurentScalar) -> "TensorOperator":
        return TensorOperator(self.r, self.m, self.n,
                              {w: {u: v * c for u, v in col.items()} for w, col in self.columns.items()})

    def __eq__(self, other):
        if not isinstance(other, TensorOperator):
            return NotImplemented
        return (self.r, self.m, self.n) == (other.r, other.m, other.n) and self.columns == other.columns

    def __hash__(self):
        return id(self)


def pi_generator(i: int, r: int, m: int, n: int, site: TwoSite = two_site) -> TensorOperator:
    """``pi_r(T_i) = Id^{i-1} ⊗ T ⊗ Id^{r-i-1}`` as a sparse operator."""
    _check_index(i, r)
    return TensorOperator(r, m, n, {w: apply_generator(i, {w: ONE}, r, m, n, site) for w in basis_words(r, m, n)})


def gamma_word(alpha: Sequence[int]) -> List[int]:
    """Generator word of ``T_{gamma_alpha}``: one run ``s+1, ..., s+a-1`` per block."""
    alpha = as_composition(alpha)
    word: List[int] = []
    start = 0
    for a in alpha:
        word.extend(range(start + 1, start + a))
        start += a
    return word


def content(word: Sequence[int], size: int) -> Tuple[int, ...]:
    c = [0] * size
    for i in word:
        c[i - 1] += 1
    return tuple(c)


def _diag_chunk(args) -> Dict[Tuple[int, ...], LaurentScalar]:
    word, words, r, m, n = args
    acc: Dict[Tuple[int, ...], LaurentScalar] = {}
    for w in words:
        amp = apply_word(word, {w: ONE}, r, m, n).get(w)
        if amp:
            c = content(w, m + n)
            v = acc.get(c, ZERO) + amp
            if v:
                acc[c] = v
            else:
                acc.pop(c, None)
    return acc


def trace_d_pi(word: Sequence[int], r: int, m: int, n: int, jobs: int = 1) -> Poly:
    """``tr(D_r pi_r(T_word))`` as a polynomial in ``z_1..z_{m+n}``.

    Each basis word is acted on separately and only its own diagonal
    amplitude is kept, so the full matrix is never built.
    """
    words = list(basis_words(r, m, n))
    word = list(word)
    if jobs > 1 and len(words) > 512:
        chunks = [words[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            parts = list(ex.map(_diag_chunk, [(word, ch, r, m, n) for ch in chunks]))
    else:
        parts = [_diag_chunk((word, words, r, m, n))]
    total: Dict[Tuple[int, ...], LaurentScalar] = {}
    for part in parts:
        for c, v in part.items():
            total[c] = total.get(c, ZERO) + v
    return ZPoly(m + n, total)


def xy_substitute(p: Poly, m: int, n: int) -> SuperPoly:
    """``z_k -> x_k`` for ``k <= m`` and ``z_{m+j} -> -y_j``."""
    return SuperPoly(m, n, p.terms).flip_y()


@dataclass(frozen=True)
class WordStats:
    E0: int
    E1: int
    L0: int
    L1: int
    N0: int
    N1: int


def word_stats(word: Sequence[int], m: int) -> WordStats:
    e0 = e1 = l0 = l1 = 0
    for a, b in zip(word, word[1:]):
        if a == b:
            if a <= m:
                e0 += 1
            else:
                e1 += 1
        elif a < b:
            if a <= m:
                l0 += 1
            else:
                l1 += 1
    n0 = sum(1 for a in word if a <= m)
    return WordStats(e0, e1, l0, l1, n0, len(word) - n0)


def prop51_trace(k: int, m: int, n: int) -> Poly:
    """Closed form of ``tr(D_k pi_k(T_{gamma_k}))`` summed over weakly increasing words."""
    if k < 1:
        raise ValueError("k must be positive")
    acc: Dict[Tuple[int, ...], LaurentScalar] = {}
    for w in combinations_with_replacement(range(1, m + n + 1), k):
        st = word_stats(w, m)
        coeff = Q ** (st.E0 - st.E1) * QMINUS ** (st.L0 + st.L1)
        if st.E1 % 2:
            coeff = -coeff
        c = content(w, m + n)
        acc[c] = acc.get(c, ZERO) + coeff
    return ZPoly(m + n, acc)


def d_commutes(r: int, m: int, n: int, site: TwoSite = two_site) -> bool:
    """Check ``D_r pi(T_i) = pi(T_i) D_r`` for every generator, with symbolic z-weights.

    ``D_r`` is diagonal with distinct monomial weights per content, so the
    identity holds exactly when every output word of ``T_i`` applied to a
    basis word has the same content as the input.
    """
    size = m + n
    for i in range(1, r):
        for w in basis_words(r, m, n):
            cw = content(w, size)
            out = apply_generator(i, {w: ONE}, r, m, n, site)
            for u in out:
                # D pi(T_i) v_w carries z^{c(u)}, pi(T_i) D v_w carries z^{c(w)}
                if content(u, size) != cw:
                    return False
    return True


def hecke_relations(r: int, m: int, n: int, site: TwoSite = two_site) -> Dict[str, bool]:
    """Check the quadratic, braid and far-commutation relations as operator identities."""
    gens = {i: pi_generator(i, r, m, n, site) for i in range(1, r)}
    ident = TensorOperator.identity(r, m, n)
    h1 = all(g @ g == g.scale(QMINUS) + ident for g in gens.values())
    h2 = all(gens[i] @ gens[i + 1] @ gens[i] == gens[i + 1] @ gens[i] @ gens[i + 1] for i in range(1, r - 1))
    h3 = all(gens[i] @ gens[j] == gens[j] @ gens[i] for i in gens for j in gens if abs(i - j) > 1)
    return {"H1": h1, "H2": h2, "H3": h3}


def zpoly_to_json(p: Poly) -> dict:
    return {"nvars": p.nvars, "terms": [{"z": list(e), "coeff": str(c)} for e, c in sorted(p.items(), reverse=True)]}


def zpoly_from_json(data: Mapping) -> Poly:
    return ZPoly(data["nvars"], {tuple(t["z"]): parse_laurent(t["coeff"]) for t in data["terms"]})
