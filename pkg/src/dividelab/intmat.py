"""Exact integer matrix helpers (lists of lists of Python ints).

Everything here is division-free or uses exact unit-triangular solves, so all
results are exact integers; no floating point anywhere.
"""

from __future__ import annotations


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(rows, cols):
    return [[0] * cols for _ in range(rows)]


def transpose(a):
    if not a:
        return []
    return [list(col) for col in zip(*a)]


def matmul(a, b):
    n = len(a)
    if n == 0:
        return []
    inner = len(a[0])
    cols = len(b[0]) if b else 0
    out = [[0] * cols for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for k in range(inner):
            x = ai[k]
            if x:
                bk = b[k]
                for j in range(cols):
                    oi[j] += x * bk[j]
    return out


def matvec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scale(a, c):
    return [[c * x for x in row] for row in a]


def mat_eq(a, b):
    return a == b


def is_identity(a):
    return a == identity(len(a))


def is_zero(a):
    return all(all(x == 0 for x in row) for row in a)


def trace(a):
    return sum(a[i][i] for i in range(len(a)))


def matpow(a, k):
    n = len(a)
    if k < 0:
        raise ValueError("negative power not supported here")
    result = identity(n)
    base = [row[:] for row in a]
    while k:
        if k & 1:
            result = matmul(result, base)
        base = matmul(base, base)
        k >>= 1
    return result


def unit_lower_inverse(l):
    """Inverse of a lower triangular matrix with unit diagonal (exact)."""
    n = len(l)
    inv = identity(n)
    for j in range(n):
        # forward substitution: x_i = b_i - sum_{k<i} l[i][k] x_k
        x = [0] * n
        for i in range(n):
            x[i] = (1 if i == j else 0) - sum(l[i][k] * x[k] for k in range(i))
        for i in range(n):
            inv[i][j] = x[i]
    return inv


def charpoly(a):
    """Characteristic polynomial det(t*Id - a), ascending coefficients.

    Division-free (Samuelson-Berkowitz), exact over the integers.
    """
    n = len(a)
    if n == 0:
        return [1]
    # descending coefficients of char poly of leading principal minors
    prev = [1, -a[0][0]]
    for m in range(1, n):
        row = a[m][:m]
        col = [a[i][m] for i in range(m)]
        sub_m = [a[i][:m] for i in range(m)]
        v = [1, -a[m][m]]
        c = col
        for _ in range(m):
            v.append(-sum(x * y for x, y in zip(row, c)))
            c = matvec(sub_m, c)
        cur = [0] * (m + 2)
        for j in range(m + 2):
            s = 0
            for k in range(max(0, j - m), min(j, m + 1) + 1):
                if k < len(v) and j - k < len(prev):
                    s += v[k] * prev[j - k]
            cur[j] = s
        prev = cur
    return list(reversed(prev))


def det_unimodular_check(a):
    """Determinant via charpoly constant term: det(a) = (-1)^n * p(0)."""
    p = charpoly(a)
    n = len(a)
    return p[0] * (1 if n % 2 == 0 else -1)
