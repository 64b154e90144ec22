"""Independent cross-check oracles, written without importing package math.

Polynomial arithmetic here is deliberately re-derived from scratch
(ascending coefficient lists, exact integer division) so the Alexander
and Milnor-number checks exercise a second, unrelated code path.
"""

from __future__ import annotations

from itertools import count


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def poly_div_exact(a, b):
    """Quotient of a by b when the division is exact; asserts zero remainder."""
    rem = list(a)
    q = [0] * (len(rem) - len(b) + 1)
    for i in range(len(rem) - len(b), -1, -1):
        c = rem[i + len(b) - 1]
        assert c % b[-1] == 0
        f = c // b[-1]
        q[i] = f
        if f:
            for j, y in enumerate(b):
                rem[i + j] -= f * y
    assert all(c == 0 for c in rem), rem
    return q


def poly_compose_power(c, k):
    """Substitute t -> t^k."""
    out = [0] * ((len(c) - 1) * k + 1)
    for i, x in enumerate(c):
        out[i * k] = x
    return out


def _t_pow_minus_1(n):
    return [-1] + [0] * (n - 1) + [1]


def torus_alexander(p, q):
    """(t^{pq}-1)(t-1) / ((t^p-1)(t^q-1)), ascending coefficients."""
    num = poly_mul(_t_pow_minus_1(p * q), _t_pow_minus_1(1))
    den = poly_mul(_t_pow_minus_1(p), _t_pow_minus_1(q))
    return poly_div_exact(num, den)


def semigroup_delta(p, q):
    """Number of gaps of the numerical semigroup <p, q>: the delta
    invariant of the (p,q) branch, counted without the closed formula."""
    reachable = {0}
    gaps = 0
    bound = (p - 1) * (q - 1)  # Frobenius conductor of <p,q>
    for n in count(1):
        if n > bound:
            break
        if (n - p >= 0 and n - p in reachable) or (
            n - q >= 0 and n - q in reachable
        ):
            reachable.add(n)
        else:
            gaps += 1
    return gaps


def newton_lambdas(pairs):
    """The twist-coefficient recursion on Newton pairs, restated."""
    lams = []
    for i, (a, b) in enumerate(pairs):
        if i == 0:
            lams.append(b)
        else:
            a_prev, b_prev = pairs[i - 1]
            lams.append(b - b_prev * a + lams[-1] * a_prev * a)
    return lams


def iterated_alexander(pairs):
    """Alexander polynomial of the iterated torus knot of the Newton
    pairs, by the satellite product formula: the stage-k cable pattern
    T(a_k, lambda_k) contributes its torus polynomial in t^(a_{k+1}...a_n).
    """
    a = [x[0] for x in pairs]
    lams = newton_lambdas(pairs)
    out = [1]
    for k in range(len(pairs)):
        mult = 1
        for j in range(k + 1, len(pairs)):
            mult *= a[j]
        out = poly_mul(
            out, poly_compose_power(torus_alexander(a[k], lams[k]), mult)
        )
    return out


def coprime_pairs(bound):
    """All (p, q), 2 <= p < q, gcd = 1, pq <= bound."""
    import math

    return [
        (p, q)
        for p in range(2, bound)
        for q in range(p + 1, bound)
        if p * q <= bound and math.gcd(p, q) == 1
    ]
