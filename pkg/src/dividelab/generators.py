"""Divide generators: Chebyshev box curves, star-product cabling, Puiseux data.

The box curve (cos(p pi u), cos(q pi u)), u in [0,1], self-intersects exactly
at parameter pairs u = j/p + k/q and |j/p - k/q| with 1 <= j < p,
1 <= k < q, j/p + k/q < 1.  All crossing times and tangent-sign computations
are exact over rationals, so the combinatorial divide is built without any
floating point.

Cabling runs the box pattern along a thickened base branch: the coordinate of
degree p runs along the strip, so each base crossing is traversed by p
strands of the pattern in both of its passages, producing a p x p grid of new
crossings, while the pattern keeps its own (p-1)(q-1)/2 self-crossings at
their true positions along the strip.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .divide import Divide, divide_from_chords
from .errors import (
    CircleBranch,
    InvalidPuiseux,
    MultiBranch,
    NotCoprime,
)

# The strip map sends increasing along-coordinate to the backward base
# direction and the across-coordinate to the left normal, hence reverses
# orientation: pattern self-crossing signs flip inside the strip.
_PATTERN_SIGN = -1


def _sign_sin(r: Fraction) -> int:
    """Sign of sin(pi * r) for non-integer rational r."""
    m = math.floor(r)
    if r == m:
        raise ValueError(f"sin(pi*{r}) vanishes")
    return -1 if m % 2 else 1


def _cos_proxy(r: Fraction) -> Fraction:
    """Rational with the sign of cos(pi * r), order-isomorphic to it."""
    rm = r % 2
    fold = min(rm, 2 - rm)
    return Fraction(1, 2) - fold


def _box_crossings(p: int, q: int, pattern_sign: int = 1):
    """Self-crossings of the box curve as ((u1, u2), sign) with u1 < u2.

    sign is the orientation of (velocity at u1, velocity at u2).
    """
    out = []
    for j in range(1, p):
        for k in range(1, q):
            uj = Fraction(j, p)
            uk = Fraction(k, q)
            if uj + uk >= 1:
                continue
            u_sum = uj + uk
            u_diff = abs(uj - uk)
            s1 = _sign_sin(Fraction(p * k, q))
            s2 = _sign_sin(Fraction(q * j, p))
            parity = -1 if (j + k) % 2 else 1
            sign_sum_diff = parity * s1 * s2  # cross(v(u_sum), v(u_diff))
            if uk > uj:
                sign_sum_diff = -sign_sum_diff
            # report for the (earlier, later) = (u_diff, u_sum) pair
            out.append(((u_diff, u_sum), -sign_sum_diff * pattern_sign))
    return out


def chebyshev_divide(p: int, q: int) -> Divide:
    """Combinatorial divide of the box curve t -> (T(p,t), T(q,t))."""
    if p < 1 or q < 1 or math.gcd(p, q) != 1:
        raise NotCoprime(f"({p},{q}) must be positive coprime integers")
    if p == 1 and q == 1:
        raise NotCoprime("(1,1) is excluded; use (1,q) for a chord")
    crossings = [
        ((0, u1), (0, u2), sign) for (u1, u2), sign in _box_crossings(p, q)
    ]
    d = divide_from_chords(1, crossings)
    assert len(d.crossings) == (p - 1) * (q - 1) // 2
    return d


def cable(p: int, q: int, base: Divide) -> Divide:
    """Star product: run the (p,q) box pattern along the base branch."""
    if p < 1 or q < 1 or math.gcd(p, q) != 1:
        raise NotCoprime(f"({p},{q}) must be positive coprime integers")
    if len(base.branches) != 1:
        raise MultiBranch("cabling base must have exactly one branch")
    branch = base.branches[0]
    if branch.closed:
        raise CircleBranch("cabling over an immersed circle is not defined")

    # walk the base branch, collecting its crossing visits in order
    visits = []  # (crossing index, out-dart slot)
    darts = branch.darts
    i = 1
    while i < len(darts) - 1:
        in_dart = darts[i]
        out_dart = darts[i + 1]
        _, ci, _ = base.site[in_dart]
        _, _, out_slot = base.site[out_dart]
        visits.append((ci, out_slot))
        i += 2
    n_v = len(visits)
    assert n_v == 2 * len(base.crossings)

    # along-positions cos(pi * w_v) for the base visits; the denominator is
    # chosen coprime to p and q so no pattern event collides with a grid
    M = n_v + 2
    while math.gcd(M, p * q) != 1:
        M += 1
    w = [Fraction(v + 1, M) for v in range(n_v)]

    # passages of the pattern through the section of base visit v
    passages = []
    for v in range(n_v):
        us = []
        m = 0
        while True:
            lo = (2 * m - w[v]) / p
            hi = (2 * m + w[v]) / p
            found = False
            if 0 < lo < 1:
                us.append(lo)
                found = True
            if 0 < hi < 1:
                us.append(hi)
                found = True
            if not found and m > 0:
                break
            m += 1
        us.sort()
        assert len(us) == p, (p, w[v], us)
        passages.append(us)

    by_crossing = {}
    for v, (ci, out_slot) in enumerate(visits):
        by_crossing.setdefault(ci, []).append((v, out_slot))

    # times are lexicographic (pattern parameter, tie-break): a passage
    # meets the p transverse strands of the other visit one after another,
    # ordered by their normal offsets cos(q pi u) within the grid square
    zero = Fraction(0)
    crossings = [
        ((0, (u1, zero)), (0, (u2, zero)), sign)
        for (u1, u2), sign in _box_crossings(p, q, _PATTERN_SIGN)
    ]
    for ci, pair in by_crossing.items():
        (v1, slot1), (v2, slot2) = pair
        chi = 1 if (slot2 - slot1) % 4 == 1 else -1
        for ua in passages[v1]:
            fa = _sign_sin(p * ua)  # +1 when moving forward along the base
            ya = _cos_proxy(q * ua)
            for ub in passages[v2]:
                fb = _sign_sin(p * ub)
                yb = _cos_proxy(q * ub)
                ta = (ua, -chi * fa * yb)
                tb = (ub, chi * fb * ya)
                crossings.append(((0, ta), (0, tb), fa * fb * chi))

    d = divide_from_chords(1, crossings)
    assert len(d.crossings) == (p - 1) * (q - 1) // 2 + p * p * len(base.crossings)
    return d


# -- Puiseux data -----------------------------------------------------------


@dataclass(frozen=True)
class PuiseuxPairs:
    """Essential Puiseux pairs (a_1,b_1),...,(a_n,b_n) of a branch."""

    pairs: tuple

    def __post_init__(self):
        pairs = tuple((int(a), int(b)) for a, b in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        if not pairs:
            raise InvalidPuiseux("at least one pair required")
        prod = 1
        prev_ratio = None
        for i, (a, b) in enumerate(pairs):
            if not 2 <= a < b:
                raise InvalidPuiseux(f"pair {i}: need 2 <= a < b, got ({a},{b})")
            prod *= a
            if math.gcd(b, prod) != 1:
                raise InvalidPuiseux(f"pair {i}: gcd(b_i, a_1...a_i) != 1")
            ratio = Fraction(b, prod)
            if prev_ratio is not None and ratio <= prev_ratio:
                raise InvalidPuiseux(f"pair {i}: b_i/(a_1...a_i) must increase")
            prev_ratio = ratio

    def __len__(self):
        return len(self.pairs)


@dataclass(frozen=True)
class CablingPlan:
    """Newton lambdas and cable exponents derived from Puiseux pairs."""

    pairs: tuple
    newton_lambdas: tuple
    cable_exponents: tuple
    stage_deltas: tuple


def puiseux_to_plan(pp) -> CablingPlan:
    if not isinstance(pp, PuiseuxPairs):
        pp = PuiseuxPairs(tuple(pp))
    pairs = pp.pairs
    lambdas = []
    for i, (a, b) in enumerate(pairs):
        if i == 0:
            lambdas.append(b)
        else:
            a_prev, b_prev = pairs[i - 1]
            lambdas.append(b - b_prev * a + lambdas[-1] * a_prev * a)

    exponents = []
    deltas = []
    for k, (a, b) in enumerate(pairs):
        if k == 0:
            bp = b
        else:
            bp = lambdas[k] - 2 * a * deltas[-1]
        if bp < 1:
            raise InvalidPuiseux(f"stage {k}: cable exponent {bp} < 1")
        if math.gcd(a, bp) != 1:
            raise InvalidPuiseux(f"stage {k}: gcd(a_k, b'_k) != 1")
        exponents.append(bp)
        delta = (a - 1) * (bp - 1) // 2
        if k > 0:
            delta += deltas[-1] * a * a
        deltas.append(delta)

    return CablingPlan(
        pairs=pairs,
        newton_lambdas=tuple(lambdas),
        cable_exponents=tuple(exponents),
        stage_deltas=tuple(deltas),
    )


def puiseux_divide(pp) -> Divide:
    """Iterated star product P_{a_n,b'_n} * ... * P_{a_1,b_1}."""
    if not isinstance(pp, PuiseuxPairs):
        pp = PuiseuxPairs(tuple(pp))
    plan = puiseux_to_plan(pp)
    d = chebyshev_divide(pp.pairs[0][0], plan.cable_exponents[0])
    for k in range(1, len(pp.pairs)):
        d = cable(pp.pairs[k][0], plan.cable_exponents[k], d)
    assert len(d.crossings) == plan.stage_deltas[-1]
    return d


def reduction_count(pp) -> int:
    """Number of curves in a complete reduction system of the monodromy."""
    if not isinstance(pp, PuiseuxPairs):
        pp = PuiseuxPairs(tuple(pp))
    a = [pair[0] for pair in pp.pairs]
    n = len(a)
    total = 0
    for i in range(1, n):
        prod = 1
        for j in range(i, n):
            prod *= a[j]
        total += prod
    return total


_PAIR_RE = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")


def parse_pairs(text: str) -> PuiseuxPairs:
    """Parse the CLI grammar "(a1,b1),(a2,b2),..."."""
    stripped = re.sub(r"\s+", "", text)
    matches = _PAIR_RE.findall(stripped)
    rebuilt = ",".join(f"({a},{b})" for a, b in matches)
    if not matches or rebuilt != stripped:
        raise InvalidPuiseux(f"cannot parse Puiseux pairs from {text!r}")
    return PuiseuxPairs(tuple((int(a), int(b)) for a, b in matches))
