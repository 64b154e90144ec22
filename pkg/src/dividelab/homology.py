"""Fiber homology of a divide: Seifert blocks, monodromy, Alexander data.

The vanishing-cycle basis is split into three blocks: one cycle per bounded
+ region (maxima), one per crossing (saddles), one per bounded − region
(minima).  The Seifert matrix is unit upper triangular in this order, with
block A counting sectors of each crossing inside each + region, block B the
same for − regions, and block G the shared edges between + and − regions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from . import intmat
from .divide import Divide
from .errors import Inconclusive, IndexOutOfRange
from .regions import counts, regions


# -- integer polynomials ----------------------------------------------------


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial, coefficients ascending by degree."""

    coeffs: tuple

    def __post_init__(self):
        c = list(self.coeffs)
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    @property
    def degree(self):
        if self.coeffs == (0,):
            return -1
        return len(self.coeffs) - 1

    def __call__(self, x):
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def __mul__(self, other):
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(tuple(out))

    def reciprocal_defect(self):
        """Difference t^deg p(1/t) - (-1)^deg p(t); zero iff Torres-symmetric."""
        n = len(self.coeffs) - 1
        sign = -1 if n % 2 else 1
        return tuple(
            self.coeffs[n - i] - sign * self.coeffs[i] for i in range(n + 1)
        )

    def __str__(self):
        if all(c == 0 for c in self.coeffs):
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                term = str(mag)
            elif i == 1:
                term = "t" if mag == 1 else f"{mag}*t"
            else:
                term = f"t^{i}" if mag == 1 else f"{mag}*t^{i}"
            if not parts:
                parts.append(term if c > 0 else "-" + term)
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        return " ".join(parts)


def poly_divmod(a: IntPoly, b: IntPoly):
    """Quotient and remainder of a by b over the rationals; exact only when
    the division stays integral (b monic here), else returns None."""
    if b.degree < 0:
        raise ZeroDivisionError
    rem = list(a.coeffs)
    q = [0] * max(1, len(rem) - len(b.coeffs) + 1)
    bc = b.coeffs
    lead = bc[-1]
    for i in range(len(rem) - len(bc), -1, -1):
        c = rem[i + len(bc) - 1]
        if c % lead != 0:
            return None
        f = c // lead
        q[i] = f
        if f:
            for j, y in enumerate(bc):
                rem[i + j] -= f * y
    return IntPoly(tuple(q)), IntPoly(tuple(rem))


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPoly:
    """n-th cyclotomic polynomial, by exact recursive division of t^n - 1."""
    num = IntPoly((-1,) + (0,) * (n - 1) + (1,))
    for d in range(1, n):
        if n % d == 0:
            qr = poly_divmod(num, cyclotomic(d))
            num = qr[0]
    return num


# -- vanishing basis and Seifert data ---------------------------------------


@dataclass(frozen=True)
class VanishingBasis:
    """Ordered cycle descriptors: ("max", region), ("saddle", crossing),
    ("min", region); block sizes are (mu_plus, mu_zero, mu_minus)."""

    descriptors: tuple
    mu_plus: int
    mu_zero: int
    mu_minus: int

    @property
    def mu(self):
        return self.mu_plus + self.mu_zero + self.mu_minus


@dataclass(frozen=True)
class SeifertData:
    A: list = field(repr=False)
    B: list = field(repr=False)
    G: list = field(repr=False)
    S: list = field(repr=False)
    N: list = field(repr=False)
    mu_plus: int = 0
    mu_zero: int = 0
    mu_minus: int = 0

    @property
    def mu(self):
        return self.mu_plus + self.mu_zero + self.mu_minus


def vanishing_basis(d: Divide) -> VanishingBasis:
    rd = regions(d)
    from .canonical import crossing_order

    maxima = [
        ("max", i)
        for i in range(rd.n_bounded)
        if rd.signs[i] > 0
    ]
    minima = [
        ("min", i)
        for i in range(rd.n_bounded)
        if rd.signs[i] < 0
    ]
    saddles = [("saddle", ci) for ci in crossing_order(d)]
    return VanishingBasis(
        descriptors=tuple(maxima + saddles + minima),
        mu_plus=len(maxima),
        mu_zero=len(saddles),
        mu_minus=len(minima),
    )


def seifert(d: Divide, basis: VanishingBasis) -> SeifertData:
    rd = regions(d)
    plus = [desc[1] for desc in basis.descriptors if desc[0] == "max"]
    minus = [desc[1] for desc in basis.descriptors if desc[0] == "min"]
    saddles = [desc[1] for desc in basis.descriptors if desc[0] == "saddle"]

    A = [
        [rd.regions[r].corners.get(ci, 0) for ci in saddles]
        for r in plus
    ]
    B = [
        [rd.regions[r].corners.get(ci, 0) for r in minus]
        for ci in saddles
    ]

    minus_pos = {r: j for j, r in enumerate(minus)}
    plus_pos = {r: i for i, r in enumerate(plus)}
    G = [[0] * len(minus) for _ in plus]
    for h, k in d.edges:
        a = rd.face_lookup[h]
        b = rd.face_lookup[k]
        if a in plus_pos and b in minus_pos:
            G[plus_pos[a]][minus_pos[b]] += 1
        elif b in plus_pos and a in minus_pos:
            G[plus_pos[b]][minus_pos[a]] += 1

    ab = intmat.matmul(A, B)
    assert all(
        ab[i][j] % 2 == 0 and ab[i][j] == 2 * G[i][j]
        for i in range(len(plus))
        for j in range(len(minus))
    ), "shared-edge block must equal half the sector product"

    p, z, m = len(plus), len(saddles), len(minus)
    mu = p + z + m
    S = intmat.identity(mu)
    for i in range(p):
        for j in range(z):
            S[i][p + j] = A[i][j]
        for j in range(m):
            S[i][p + z + j] = G[i][j]
    for i in range(z):
        for j in range(m):
            S[p + i][p + z + j] = B[i][j]
    N = intmat.sub(S, intmat.identity(mu))
    return SeifertData(A=A, B=B, G=G, S=S, N=N, mu_plus=p, mu_zero=z, mu_minus=m)


def monodromy(sd: SeifertData):
    """Homological monodromy T = (S^t)^{-1} S, exact integer matrix."""
    st_inv = intmat.unit_lower_inverse(intmat.transpose(sd.S))
    return intmat.matmul(st_inv, sd.S)


def conjugation(sd: SeifertData):
    """Involution C: the Seifert matrix with its middle block row negated."""
    p, z, m = sd.mu_plus, sd.mu_zero, sd.mu_minus
    C = [row[:] for row in sd.S]
    for i in range(p, p + z):
        for j in range(p + z + m):
            C[i][j] = -C[i][j]
    return C


def mu_identity_check(cnt, C) -> bool:
    """mu = 2*mu_zero + trace(C)."""
    return cnt.mu == 2 * cnt.mu_zero + intmat.trace(C)


def alexander(sd: SeifertData) -> IntPoly:
    """Characteristic polynomial det(t*Id - T) of the monodromy."""
    return IntPoly(tuple(intmat.charpoly(monodromy(sd))))


def intersection_form(sd: SeifertData):
    """Skew pairing matrix J = S^t - S used by the transvections."""
    return intmat.sub(intmat.transpose(sd.S), sd.S)


def transvection_product(basis: VanishingBasis, sd: SeifertData, word):
    """Product of transvections along basis cycles, first entry acting first.

    Entry i >= 0 is the right-handed transvection along cycle i,
    x -> x - (J[i]. x) e_i with J = S^t - S; entry -(i+1) is its inverse.
    The full word 0..mu-1 reproduces the monodromy.
    """
    mu = basis.mu
    J = intersection_form(sd)
    out = intmat.identity(mu)
    for w in word:
        idx = w if w >= 0 else -w - 1
        if not 0 <= idx < mu:
            raise IndexOutOfRange(f"basis index {w} outside 0..{mu - 1}")
        eps = -1 if w >= 0 else 1
        v = intmat.identity(mu)
        for j in range(mu):
            v[idx][j] += eps * J[idx][j]
        out = intmat.matmul(v, out)
    return out


def full_word(basis: VanishingBasis):
    """The distinguished word: maxima, saddles, minima, in basis order."""
    return list(range(basis.mu))


# -- order of the monodromy -------------------------------------------------


@dataclass(frozen=True)
class OrderProfile:
    finite: bool
    order: int | None  # least k with T^k = Id, when finite
    certificate: str | None  # reason for infinite order
    spectral_radius_one: bool  # char poly is a product of cyclotomics
    unipotent_exponent: int | None  # k with (T^k - Id) nilpotent != 0


def order_profile(T, k_max: int) -> OrderProfile:
    """Decide the order of a unimodular integer matrix.

    Strips cyclotomic factors from the characteristic polynomial.  If a
    non-cyclotomic factor remains, some eigenvalue lies off the unit circle
    (Kronecker) and the order is infinite.  Otherwise the candidate order k0
    is the lcm of the cyclotomic indices: either T^k0 = Id (finite order, the
    least divisor is returned) or T^k0 - Id is nilpotent nonzero (infinite
    order with unipotent certificate).
    """
    n = len(T)
    if n == 0 or intmat.is_identity(T):
        return OrderProfile(True, 1, None, True, None)
    chi = IntPoly(tuple(intmat.charpoly(T)))
    residual = chi
    indices = []
    m = 1
    bound = 2 * n * n + 2
    while m <= bound and residual.degree > 0:
        phi = _euler_phi(m)
        if phi <= residual.degree:
            cyc = cyclotomic(m)
            while residual.degree >= cyc.degree:
                qr = poly_divmod(residual, cyc)
                if qr is None or qr[1].coeffs != (0,):
                    break
                residual = qr[0]
                indices.append(m)
        m += 1
    if residual.degree > 0:
        return OrderProfile(
            finite=False,
            order=None,
            certificate="eigenvalue off the unit circle",
            spectral_radius_one=False,
            unipotent_exponent=None,
        )
    k0 = 1
    for m in indices:
        k0 = k0 * m // math.gcd(k0, m)
    tk = intmat.matpow(T, k0)
    if intmat.is_identity(tk):
        order = k0
        for d in sorted(_divisors(k0)):
            if intmat.is_identity(intmat.matpow(T, d)):
                order = d
                break
        if order > k_max:
            raise Inconclusive(f"finite order {order} exceeds k_max={k_max}")
        return OrderProfile(True, order, None, True, None)
    nil = intmat.sub(tk, intmat.identity(n))
    power = nil
    nilpotent = False
    for _ in range(n):
        if intmat.is_zero(power):
            nilpotent = True
            break
        power = intmat.matmul(power, nil)
    assert nilpotent, "cyclotomic char poly forces T^k0 - Id nilpotent"
    return OrderProfile(
        finite=False,
        order=None,
        certificate="nontrivial unipotent part",
        spectral_radius_one=True,
        unipotent_exponent=k0,
    )


def _euler_phi(m):
    out = m
    mm = m
    p = 2
    while p * p <= mm:
        if mm % p == 0:
            out -= out // p
            while mm % p == 0:
                mm //= p
        p += 1
    if mm > 1:
        out -= out // mm
    return out


def _divisors(k):
    out = set()
    d = 1
    while d * d <= k:
        if k % d == 0:
            out.add(d)
            out.add(k // d)
        d += 1
    return out
