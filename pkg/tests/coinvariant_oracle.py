"""Brute-force coinvariant quotient, the independent rank oracle.

Builds, degree by degree, the quotient of the polynomial ring by the
ideal generated by positive-degree group invariants, using exact
Fraction linear algebra and explicit monomial bookkeeping.  Feasible
for rank <= 2; shares no code with the closed-form quotient route.
"""

from __future__ import annotations

from fractions import Fraction


def monomials(n, d):
    """Exponent tuples of total degree d in n variables."""
    if n == 1:
        return [(d,)]
    out = []
    for first in range(d, -1, -1):
        for rest in monomials(n - 1, d - first):
            out.append((first,) + rest)
    return out


def _linear_power(row, e, n):
    """(sum_j row[j] x_j)^e as an exponent-to-coefficient dict."""
    out = {(0,) * n: 1}
    for _ in range(e):
        nxt: dict = {}
        for expo, coeff in out.items():
            for j, a in enumerate(row):
                if a == 0:
                    continue
                bumped = list(expo)
                bumped[j] += 1
                key = tuple(bumped)
                nxt[key] = nxt.get(key, 0) + coeff * a
        out = nxt
    return out


def act_on_monomial(matrix, expo):
    """Image of a monomial under variable substitution x_i -> row_i . x."""
    n = len(matrix)
    result = {(0,) * n: 1}
    for i, e in enumerate(expo):
        if e == 0:
            continue
        factor = _linear_power(matrix[i], e, n)
        merged: dict = {}
        for ea, ca in result.items():
            for eb, cb in factor.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                merged[key] = merged.get(key, 0) + ca * cb
        result = merged
    return result


def action_matrix(matrix, d):
    """Matrix of the substitution action on the degree-d monomial basis."""
    n = len(matrix)
    mons = monomials(n, d)
    index = {m: k for k, m in enumerate(mons)}
    rows = []
    for m in mons:
        image = act_on_monomial(matrix, m)
        row = [0] * len(mons)
        for expo, coeff in image.items():
            row[index[expo]] = coeff
        rows.append(row)
    return rows, mons


def rref(rows):
    """Reduced row echelon form over Fractions; returns (basis, pivot cols)."""
    rows = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    rank = 0
    n_cols = len(rows[0]) if rows else 0
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
        pivots.append(col)
        rank += 1
    return rows[:rank], pivots


def coinvariant_quotient(matrices, max_degree):
    """Graded dims and per-element traces of the coinvariant quotient.

    Returns (dims, traces) where dims[d] is the dimension of degree d of
    the quotient and traces[w][d] the trace of group element w on it.
    """
    n = len(matrices[0])
    order = len(matrices)
    dims = []
    traces = [[] for _ in matrices]
    invariant_bases: dict[int, list] = {}

    for d in range(max_degree + 1):
        mons = monomials(n, d)
        index = {m: k for k, m in enumerate(mons)}
        acts = [action_matrix(m, d)[0] for m in matrices]

        # Reynolds projection of every monomial spans the invariants.
        averaged = [
            [
                Fraction(sum(acts[w][r][c] for w in range(order)), order)
                for c in range(len(mons))
            ]
            for r in range(len(mons))
        ]
        invariant_bases[d], _ = rref(averaged)

        span = []
        for e in range(1, d + 1):
            mons_e = monomials(n, e)
            for shift in monomials(n, d - e):
                for inv_row in invariant_bases[e]:
                    out = [Fraction(0)] * len(mons)
                    for k, coeff in enumerate(inv_row):
                        if coeff:
                            key = tuple(a + b for a, b in zip(mons_e[k], shift))
                            out[index[key]] += coeff
                    span.append(out)
        basis, pivots = rref(span) if span else ([], [])
        dims.append(len(mons) - len(basis))

        for w, act in enumerate(acts):
            full_trace = sum(act[k][k] for k in range(len(mons)))
            ideal_trace = Fraction(0)
            for bi, row in enumerate(basis):
                image = [
                    sum(row[k] * act[k][c] for k in range(len(mons)) if row[k])
                    for c in range(len(mons))
                ]
                ideal_trace += image[pivots[bi]]
            traces[w].append(full_trace - ideal_trace)

    return dims, traces
