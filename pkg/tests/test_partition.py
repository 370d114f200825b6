from math import factorial

import pytest
from hypothesis import given, strategies as st

from superfrob.partition import (
    ShapeError,
    all_permutations,
    compositions_of,
    conjugate,
    count_standard_tableaux,
    cycle_stats,
    cycle_type,
    hook_set,
    is_horizontal_strip,
    kostka,
    partitions_of,
    permutation_sign,
    skew_cells,
    ssyt_enumerate,
    subpartitions,
    zee,
)

from strategies import partitions


@pytest.mark.parametrize("lam, want", [((3, 1), (2, 1, 1)), ((1, 1, 1), (3,)), ((), ())])
def test_conjugate(lam, want):
    assert conjugate(lam) == want


@given(partitions(max_size=12))
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == lam


@pytest.mark.parametrize("lam, z", [((2, 1), 2), ((3,), 3), ((1, 1), 2), ((2, 2, 1), 8)])
def test_zee(lam, z):
    assert zee(lam) == z
    assert cycle_stats(lam).zed == z


def test_cycle_stats_fields():
    st_ = cycle_stats((2, 1, 1))
    assert (st_.size, st_.length, st_.multiplicities) == (4, 3, {1: 2, 2: 1})


def test_partitions_of():
    assert partitions_of(3) == [(3,), (2, 1), (1, 1, 1)]
    assert partitions_of(0) == [()]
    assert partitions_of(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert [len(partitions_of(r)) for r in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]


@pytest.mark.parametrize("r", range(1, 9))
def test_class_sizes_sum_to_factorial(r):
    assert sum(factorial(r) // zee(lam) for lam in partitions_of(r)) == factorial(r)


def test_compositions():
    comps = list(compositions_of(4))
    assert len(comps) == 8 and len(set(comps)) == 8
    assert all(sum(c) == 4 for c in comps)


def test_hook_set_examples():
    assert hook_set(1, 1, 4) == [(4,), (3, 1), (2, 1, 1), (1, 1, 1, 1)]
    assert hook_set(3, 3, 5) == partitions_of(5)
    assert hook_set(1, 0, 2) == [(2,)]


@given(st.integers(0, 7), st.integers(0, 7), st.integers(0, 7))
def test_hook_set_full_when_wide(m, n, r):
    if m >= r or n >= r:
        assert hook_set(m, n, r) == partitions_of(r)


def test_ssyt_examples():
    fills = ssyt_enumerate((3,), (1,), 2)
    assert [sorted(f.values()) for f in fills] == [[1, 1], [1, 2], [2, 2]]
    assert ssyt_enumerate((1, 1), (), 1) == []
    assert ssyt_enumerate((3,), (3,), 4) == [{}]
    assert len(ssyt_enumerate((2, 1), (), 3)) == 8


@given(partitions(max_size=5), st.integers(1, 4))
def test_ssyt_are_semistandard(lam, N):
    for f in ssyt_enumerate(lam, (), N):
        for (i, j), v in f.items():
            assert 1 <= v <= N
            if (i, j + 1) in f:
                assert f[(i, j + 1)] >= v
            if (i + 1, j) in f:
                assert f[(i + 1, j)] > v


def test_cells_are_one_based():
    assert skew_cells((2, 1), (1,)) == [(1, 2), (2, 1)]
    with pytest.raises(ShapeError):
        skew_cells((1,), (2,))


def test_horizontal_strip():
    assert is_horizontal_strip((3, 1), (2,))
    assert is_horizontal_strip((2, 2), (2,))
    assert not is_horizontal_strip((2, 2), (1,))
    assert not is_horizontal_strip((1, 1), ())


def test_kostka_and_syt():
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((3,), (1, 1, 1)) == 1
    assert kostka((2, 1), (3,)) == 0
    assert count_standard_tableaux((3, 2)) == 5
    for lam in partitions_of(5):
        assert count_standard_tableaux(lam) == kostka(lam, (1,) * 5)


def test_subpartitions():
    assert subpartitions((2, 1)) == [(2, 1), (2,), (1, 1), (1,), ()]


def test_permutation_helpers():
    perms = list(all_permutations(4))
    assert len(perms) == 24
    assert sum(permutation_sign(p) for p in perms) == 0
    counts = {}
    for p in perms:
        counts[cycle_type(p)] = counts.get(cycle_type(p), 0) + 1
    assert counts == {lam: 24 // zee(lam) for lam in partitions_of(4)}
