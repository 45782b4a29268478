from collections import Counter
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from deltapos.qt_algebra import ONE, eval_rational, q, t
from deltapos.recursion import (
    ThreePartShape,
    block_signature_sums,
    g_block_bruteforce,
    recursion_terms,
)
from deltapos.shapes import (
    Alphabet,
    BlockSignature,
    Partition,
    Ssyt,
    classify_blocks,
    conjugate,
    enumerate_ssyt,
    partitions,
    schur_eval,
)


def brute_force_count(shape, m):
    cells = [(r, c) for r, n in enumerate(shape) for c in range(n)]
    count = 0
    for values in product(range(m + 1), repeat=len(cells)):
        f = dict(zip(cells, values))
        rows_ok = all(f[r, c] <= f[r, c + 1] for r, c in cells if (r, c + 1) in f)
        cols_ok = all(f[r, c] < f[r + 1, c] for r, c in cells if (r + 1, c) in f)
        count += rows_ok and cols_ok
    return count


def test_partition_validation():
    assert Partition.parse("3,2,2,1") == (3, 2, 2, 1)
    assert Partition(()).size == 0
    with pytest.raises(ValueError):
        Partition((2, 1, 0))
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))


def test_conjugate_examples():
    assert conjugate((3, 2, 2, 1)) == (4, 3, 1)
    assert conjugate(()) == ()
    assert conjugate((1, 1, 1, 1)) == (4,)


def test_partition_counts():
    assert [len(list(partitions(n))) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]
    assert len(list(partitions(12, 3))) == 19


def test_enumeration_examples():
    assert len(list(enumerate_ssyt((1,), 2))) == 3
    assert list(enumerate_ssyt((1, 1, 1, 1), 2)) == []
    assert len(list(enumerate_ssyt((2, 1), 2))) == 8


def test_enumeration_is_ordered_and_valid():
    tabs = list(enumerate_ssyt((3, 2), 2))
    keys = [sum(tab.rows, ()) for tab in tabs]
    assert keys == sorted(keys)
    with pytest.raises(ValueError):
        Ssyt.from_rows([[0, 1], [0]])  # column not strict
    with pytest.raises(ValueError):
        Ssyt.from_rows([[1, 0]])


@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_enumeration_matches_brute_force(m):
    for n in range(0, 9 if m <= 1 else 7 if m == 2 else 6):
        for shape in partitions(n):
            assert len(list(enumerate_ssyt(shape, m))) == brute_force_count(shape, m), shape


def test_schur_examples():
    assert schur_eval((1,), [(0, 0), (0, 1), (0, 2)]) == ONE + t + t * t
    assert schur_eval((1, 1), [(0, 0), (1, 0)]) == q
    assert schur_eval((2,), [(0, 0), (0, 1), (1, 0)]) == ONE + t + q + t * t + q * t + q * q
    assert schur_eval((2,), Alphabet([ONE, q])) == ONE + q + q * q


@settings(max_examples=40, deadline=None)
@given(
    st.integers(0, 6).flatmap(lambda n: st.sampled_from(list(partitions(n)))),
    st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)), min_size=3, max_size=3),
    st.permutations(range(3)),
)
def test_schur_symmetry(lam, letters, perm):
    shuffled = [letters[i] for i in perm]
    assert schur_eval(lam, letters) == schur_eval(lam, shuffled)


@pytest.mark.parametrize("n", range(0, 8))
def test_schur_at_one_counts_tableaux(n):
    for lam in partitions(n):
        value = eval_rational(schur_eval(lam, [(0, 0), (1, 0), (0, 1)]), 1, 1)
        assert value == len(list(enumerate_ssyt(lam, 2)))


def test_classify_examples():
    assert classify_blocks(Ssyt.from_rows([[0, 1, 2]])) == BlockSignature(0, 0, "A0", 1, 2)
    assert classify_blocks(Ssyt.from_rows([[0], [1], [2]])) == BlockSignature(1, 0, "A2", 0, 0)
    sig = classify_blocks(Ssyt.from_rows([[1, 1, 2], [2]]))
    assert (sig.a1, sig.k1, sig.a2, sig.k2) == (0, 0, 1, 2)
    with pytest.raises(ValueError):
        classify_blocks(Ssyt.from_rows([[0, 3]]))


@pytest.mark.parametrize("n", range(0, 11))
def test_block_signature_completeness(n):
    """Every filling lands in exactly one block of the recursion's sum."""
    for lam in partitions(n, 3):
        shape = ThreePartShape.from_partition(lam)
        observed = Counter()
        for tab in enumerate_ssyt(conjugate(lam), 2):
            observed[classify_blocks(tab).block_args()] += 1
        expected = Counter()
        for a, k1, k2 in recursion_terms(shape):
            expected[(a, k1, k2)] += (k1 + 1) * (k2 + 1)
        assert observed == expected, lam
        for args, (_, weight) in block_signature_sums(shape).items():
            assert weight == g_block_bruteforce(*args)
