from fractions import Fraction
from itertools import permutations
from math import factorial, prod

import pytest
from hypothesis import given, strategies as st

from eulerian.hankel import bareiss_det, hankel_minors, leading_minors_int
from eulerian.polynomials import eulerian_poly, evaluate


def leibniz_det(m):
    """Determinant by summing over all permutations; independent of elimination."""
    n = len(m)
    total = 0
    for p in permutations(range(n)):
        inversions = sum(p[i] > p[j] for i in range(n) for j in range(i + 1, n))
        total += (-1) ** inversions * prod(m[i][p[i]] for i in range(n))
    return total


square = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=n, max_size=n)
)


@given(square)
def test_bareiss_matches_leibniz(m):
    assert bareiss_det(m) == leibniz_det(m)


@given(square)
def test_leading_minors_match_leibniz(m):
    expected = [leibniz_det([r[:k] for r in m[:k]]) for k in range(1, len(m) + 1)]
    assert leading_minors_int(m) == expected


@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=7), min_size=7, max_size=7))
def test_hankel_rational_matches_leibniz(seq):
    minors = hankel_minors(seq, 4)
    for k in range(1, 5):
        assert minors[k - 1] == leibniz_det([[seq[i + j] for j in range(k)] for i in range(k)])


def test_examples():
    assert hankel_minors([factorial(n) for n in range(3)], 2) == [1, 1]
    assert hankel_minors([1, 1, 1], 2) == [1, 0]
    seq = [evaluate(eulerian_poly("B", n), Fraction(1, 2)) for n in range(7)]
    assert all(d > 0 for d in hankel_minors(seq, 4))


def test_b_at_one():
    # 1, 2, 8, 48, 384: det [[1,2],[2,8]] = 4
    seq = [2**n * factorial(n) for n in range(5)]
    assert hankel_minors(seq, 3)[:2] == [1, 4]
    assert hankel_minors(seq, 3)[2] == leibniz_det([[seq[i + j] for j in range(3)] for i in range(3)])


def test_zero_pivot_fallback():
    # first minor is zero, later ones are not
    seq = [0, 1, 0, 1, 0]
    assert hankel_minors(seq, 3) == [0, -1, 0]
    assert hankel_minors([0, 1, 2, 3, 5], 3) == [0, -1, leibniz_det([[0, 1, 2], [1, 2, 3], [2, 3, 5]])]


def test_insufficient_entries():
    with pytest.raises(ValueError):
        hankel_minors([1, 2, 3], 3)
