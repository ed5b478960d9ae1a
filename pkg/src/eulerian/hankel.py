"""Fraction-free (Bareiss) determinants and Hankel leading principal minors."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence


def bareiss_det(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix, with row pivoting on zero pivots."""
    m = [list(r) for r in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def leading_minors_int(matrix: Sequence[Sequence[int]]) -> list[int]:
    """All leading principal minors in one elimination pass.

    Without pivoting, the k-th Bareiss pivot is exactly the k-th leading minor.
    A zero pivot stops the pass; the remaining minors are then computed one by
    one with pivoting.
    """
    m = [list(r) for r in matrix]
    n = len(m)
    minors: list[int] = []
    prev = 1
    for k in range(n):
        pivot = m[k][k]
        minors.append(pivot)
        if pivot == 0:
            break
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    for size in range(len(minors) + 1, n + 1):
        minors.append(bareiss_det([row[:size] for row in matrix[:size]]))
    return minors


def hankel_matrix(seq: Sequence[Fraction], m: int) -> list[list[Fraction]]:
    return [[seq[i + j] for j in range(m)] for i in range(m)]


def hankel_minors(seq: Sequence, m: int) -> list[Fraction]:
    """Leading principal minors of orders 1..m of the Hankel matrix ``(seq[i+j])``.

    Denominators are cleared by a common multiple L, so the order-k minor of
    the integer matrix is L**k times the rational one.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    if len(seq) < 2 * m - 1:
        raise ValueError(f"order-{m} Hankel matrix needs {2 * m - 1} entries, got {len(seq)}")
    vals = [Fraction(v) for v in seq[: 2 * m - 1]]
    scale = lcm(*(v.denominator for v in vals))
    ints = [int(v * scale) for v in vals]
    minors = leading_minors_int(hankel_matrix(ints, m))
    return [Fraction(d, scale ** (k + 1)) for k, d in enumerate(minors)]
