"""Shared test utilities: independent exact linear algebra and randomizers.

Everything here is deliberately written from scratch so that oracle
checks do not share code with the library paths they certify.
"""

from __future__ import annotations

from fractions import Fraction


def mat_mul(a, b):
    cols = list(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a
    )


def mat_eye(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def kernel_rank(matrix) -> int:
    """Dimension of the rational kernel, by Fraction Gaussian elimination."""
    rows = [[Fraction(x) for x in row] for row in matrix]
    n_cols = len(rows[0]) if rows else 0
    rank = 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = Fraction(1) / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return n_cols - rank


def random_unimodular(rng, n, steps=12):
    """Random integer matrix with determinant +-1, returned with its inverse."""
    g = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    g_inv = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(steps):
        op = rng.randrange(3)
        i = rng.randrange(n)
        j = rng.randrange(n)
        if op == 0 and i != j:
            k = rng.choice([-2, -1, 1, 2])
            for c in range(n):
                g[i][c] += k * g[j][c]
            for r in range(n):
                g_inv[r][j] -= k * g_inv[r][i]
        elif op == 1 and i != j:
            g[i], g[j] = g[j], g[i]
            for r in range(n):
                g_inv[r][i], g_inv[r][j] = g_inv[r][j], g_inv[r][i]
        else:
            for c in range(n):
                g[i][c] = -g[i][c]
            for r in range(n):
                g_inv[r][i] = -g_inv[r][i]
    g = tuple(tuple(row) for row in g)
    g_inv = tuple(tuple(row) for row in g_inv)
    assert mat_mul(g_inv, g) == mat_eye(n)
    return g, g_inv


def block_involution(rng, n):
    """Random block-diagonal involution with known (s, a, c) multiplicities."""
    c = rng.randrange(0, n // 2 + 1)
    rest = n - 2 * c
    s = rng.randrange(0, rest + 1)
    a = rest - s
    m = [[0] * n for _ in range(n)]
    pos = 0
    for _ in range(s):
        m[pos][pos] = 1
        pos += 1
    for _ in range(a):
        m[pos][pos] = -1
        pos += 1
    for _ in range(c):
        m[pos][pos + 1] = 1
        m[pos + 1][pos] = 1
        pos += 2
    return tuple(tuple(row) for row in m), (s, a, c)


def random_involution(rng, n, steps=12):
    """Random integral involution: a conjugated block involution."""
    tau0, sac = block_involution(rng, n)
    g, g_inv = random_unimodular(rng, n, steps)
    tau = mat_mul(mat_mul(g_inv, tau0), g)
    return tau, tau0, sac
