"""Exact linear algebra over the integers and GF(2).

Matrices are tuples of int tuples (rows).  Everything stays in exact
integer or Fraction arithmetic; floating point is never used.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

Matrix = tuple[tuple[int, ...], ...]


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a
    )


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_neg(a: Matrix) -> Matrix:
    return tuple(tuple(-x for x in row) for row in a)


def is_identity(a: Matrix) -> bool:
    return a == identity(len(a))


def det(m: Matrix) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rank_rational(m: Matrix) -> int:
    """Rank of an integer matrix over the rationals."""
    if not m:
        return 0
    rows = [[Fraction(x) for x in row] for row in m]
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def rank_mod2(m: Matrix) -> int:
    """Rank over the 2-element field, rows packed as bitmasks."""
    bits = []
    for row in m:
        word = 0
        for j, x in enumerate(row):
            if x % 2:
                word |= 1 << j
        if word:
            bits.append(word)
    rank = 0
    while bits:
        pivot = bits.pop()
        rank += 1
        low = pivot & -pivot
        bits = [b ^ pivot if b & low else b for b in bits]
        bits = [b for b in bits if b]
    return rank


def char_rev_coeffs(m: Matrix) -> tuple[int, ...]:
    """Coefficients of det(I - q*m), ascending in q.

    Coefficient of q^k is (-1)^k times the sum of principal k x k minors.
    """
    n = len(m)
    coeffs = [1] + [0] * n
    for k in range(1, n + 1):
        total = 0
        for subset in combinations(range(n), k):
            sub = tuple(tuple(m[i][j] for j in subset) for i in subset)
            total += det(sub)
        coeffs[k] = total if k % 2 == 0 else -total
    return tuple(coeffs)
