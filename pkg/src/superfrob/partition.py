"""Partitions, compositions and (skew) semistandard tableaux.

Partitions are plain tuples of positive ints in weakly decreasing order,
never padded with zeros. Cells are ``(row, col)``, 1-based, English
convention.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Dict, Iterator, List, Sequence, Tuple

Partition = Tuple[int, ...]
Composition = Tuple[int, ...]
Cell = Tuple[int, int]
Filling = Dict[Cell, int]


class ShapeError(ValueError):
    pass


def as_partition(parts: Sequence[int]) -> Partition:
    """Validate and strip trailing zeros."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x <= 0 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ShapeError(f"not a partition: {tuple(parts)}")
    return p


def as_composition(parts: Sequence[int]) -> Composition:
    c = tuple(int(x) for x in parts)
    if any(x <= 0 for x in c):
        raise ShapeError(f"not a composition: {tuple(parts)}")
    return c


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > j) for j in range(lam[0]))


@dataclass(frozen=True)
class CycleStats:
    size: int
    length: int
    multiplicities: Dict[int, int]
    zed: int


def zee(lam: Sequence[int]) -> int:
    """Centralizer order ``prod_i i^{m_i} m_i!`` of a permutation of cycle type ``lam``."""
    z = 1
    for i, mi in Counter(lam).items():
        z *= i ** mi * factorial(mi)
    return z


def cycle_stats(lam: Sequence[int]) -> CycleStats:
    mult = dict(sorted(Counter(lam).items()))
    return CycleStats(size=sum(lam), length=len(lam), multiplicities=mult, zed=zee(lam))


def multiplicity(lam: Sequence[int], i: int) -> int:
    return sum(1 for x in lam if x == i)


@lru_cache(maxsize=None)
def _partitions(r: int, cap: int) -> Tuple[Partition, ...]:
    if r == 0:
        return ((),)
    out: List[Partition] = []
    for first in range(min(r, cap), 0, -1):
        for rest in _partitions(r - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(r: int) -> List[Partition]:
    """All partitions of ``r`` in reverse-lexicographic order, starting at ``(r,)``."""
    if r < 0:
        return []
    return list(_partitions(r, r))


def compositions_of(r: int) -> Iterator[Composition]:
    if r == 0:
        yield ()
        return
    for first in range(1, r + 1):
        for rest in compositions_of(r - first):
            yield (first,) + rest


def in_hook(lam: Sequence[int], m: int, n: int) -> bool:
    return all(part <= n for part in lam[m:])


def hook_set(m: int, n: int, r: int) -> List[Partition]:
    """Partitions of ``r`` whose diagram fits in the ``(m, n)``-hook."""
    return [lam for lam in partitions_of(r) if in_hook(lam, m, n)]


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    if len(inner) > len(outer):
        return False
    return all(i <= o for i, o in zip(inner, outer))


def subpartitions(lam: Sequence[int]) -> List[Partition]:
    """Every partition ``mu`` with ``mu ⊆ lam`` (including ``()`` and ``lam``)."""
    out: List[Partition] = []

    def rec(i: int, cap: int, acc: List[int]):
        if i == len(lam):
            out.append(as_partition(acc))
            return
        for v in range(min(cap, lam[i]), -1, -1):
            if v == 0:
                out.append(as_partition(acc))
                return
            acc.append(v)
            rec(i + 1, v, acc)
            acc.pop()

    rec(0, lam[0] if lam else 0, [])
    return out


def skew_cells(outer: Sequence[int], inner: Sequence[int]) -> List[Cell]:
    if not contains(outer, inner):
        raise ShapeError(f"{tuple(inner)} is not contained in {tuple(outer)}")
    cells = []
    for i, o in enumerate(outer):
        start = inner[i] if i < len(inner) else 0
        for j in range(start, o):
            cells.append((i + 1, j + 1))
    return cells


def is_horizontal_strip(outer: Sequence[int], inner: Sequence[int]) -> bool:
    """``outer / inner`` has at most one cell per column (interlacing)."""
    if not contains(outer, inner):
        return False
    for i in range(len(outer)):
        if i >= 1 and outer[i] > (inner[i - 1] if i - 1 < len(inner) else 0):
            return False
    return True


def ssyt_enumerate(outer: Sequence[int], inner: Sequence[int], max_entry: int) -> List[Filling]:
    """All semistandard fillings of ``outer/inner`` with entries in ``1..max_entry``.

    Rows weakly increase, columns strictly increase. Cells are filled in
    row-major order and the output order is the lexicographic order of the
    entries read that way.
    """
    outer = as_partition(outer)
    inner = as_partition(inner)
    cells = skew_cells(outer, inner)
    filling: Filling = {}
    out: List[Filling] = []

    def rec(k: int):
        if k == len(cells):
            out.append(dict(filling))
            return
        i, j = cells[k]
        lo = 1
        left = filling.get((i, j - 1))
        if left is not None:
            lo = left
        up = filling.get((i - 1, j))
        if up is not None:
            lo = max(lo, up + 1)
        for v in range(lo, max_entry + 1):
            filling[(i, j)] = v
            rec(k + 1)
        filling.pop((i, j), None)

    rec(0)
    return out


def filling_chain(outer: Sequence[int], inner: Sequence[int], filling: Filling, max_entry: int) -> List[Partition]:
    """The chain ``inner = l0 ⊂ l1 ⊂ ... ⊂ l_max = outer`` where ``l_k`` adds entries ``<= k``."""
    inner = as_partition(inner)
    chain = [inner]
    for k in range(1, max_entry + 1):
        rows = list(inner) + [0] * (len(outer) - len(inner))
        for (i, _j), v in filling.items():
            if v <= k:
                rows[i - 1] += 1
        chain.append(as_partition(rows))
    return chain


def kostka(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Number of SSYT of shape ``lam`` and content ``mu``."""
    return _kostka(as_partition(lam), tuple(mu))


@lru_cache(maxsize=None)
def _kostka(lam: Partition, mu: Tuple[int, ...]) -> int:
    if sum(lam) != sum(mu):
        return 0
    if not mu:
        return 1
    # strip the largest entry: lam / nu must be a horizontal strip of size mu[-1]
    total = 0
    for nu in subpartitions(lam):
        if sum(lam) - sum(nu) == mu[-1] and is_horizontal_strip(lam, nu):
            total += _kostka(nu, mu[:-1])
    return total


def count_standard_tableaux(lam: Sequence[int]) -> int:
    """Hook length formula."""
    lam = as_partition(lam)
    conj = conjugate(lam)
    n = sum(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(n) // hooks


def cycle_type(perm: Sequence[int]) -> Partition:
    """Cycle type of a permutation given in one-line notation on ``0..n-1``."""
    seen = [False] * len(perm)
    lengths = []
    for s in range(len(perm)):
        if not seen[s]:
            k = 0
            j = s
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                k += 1
            lengths.append(k)
    return tuple(sorted(lengths, reverse=True))


def permutation_sign(perm: Sequence[int]) -> int:
    lam = cycle_type(perm)
    return -1 if (sum(lam) - len(lam)) % 2 else 1


def all_permutations(n: int):
    return permutations(range(n))
