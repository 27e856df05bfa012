"""Determinant and rank of small dense matrices over an exact field."""

from __future__ import annotations


def determinant(rows, field):
    """Fraction-free Bareiss elimination; every division is exact."""
    n = len(rows)
    if n == 0:
        return field.one
    m = [[field(x) for x in row] for row in rows]
    sign = 1
    prev = field.one
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return field.zero
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) / prev
        prev = pivot
    return m[n - 1][n - 1] * sign


def rank(rows, field) -> int:
    m = [[field(x) for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field.one / m[r][col]
        for i in range(len(m)):
            if i != r and m[i][col]:
                factor = m[i][col] * inv
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r
