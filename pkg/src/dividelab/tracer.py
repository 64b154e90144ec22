"""Numeric tracing of morsification curves into combinatorial divides.

A branch with one Puiseux chart is deformed into a real curve whose
coordinates are rescaled Chebyshev polynomials: the deformation parameter s
squeezes the oscillation zone, and the curve's self-intersections inside a
disk form the divide of the branch.  This module samples such curves,
locates all double points, checks genericity (no tangencies, no triple
points), and hands an exact combinatorial divide to the core.

All floating point is confined to this module; downstream consumers receive
integer/rational data only.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .divide import Divide, divide_from_chords
from .errors import DivideError, TangencyDetected, TriplePoint

COORD_TOL = 1e-9          # refined crossing coordinate error
SEPARATION_TOL = 1e-6     # below this, a close approach counts as a tangency
DISK_MARGIN = 1.1         # working disk: 10% margin around the crossings


def chebyshev_eval(n: int, t) -> float:
    """Degree-n Chebyshev polynomial, critical values +-1, leading
    coefficient 2^(n-1); closed forms via cos on [-1,1] and cosh outside."""
    if n < 0:
        raise DivideError("chebyshev_eval needs n >= 0")
    t = float(t)
    if n == 0:
        return 1.0
    if -1.0 <= t <= 1.0:
        return math.cos(n * math.acos(t))
    if t > 1.0:
        return math.cosh(n * math.acosh(t))
    sign = -1.0 if n % 2 else 1.0
    return sign * math.cosh(n * math.acosh(-t))


@dataclass(frozen=True)
class ParamCurve:
    """One branch: x = s^m T(m, t/s) / 2^(m-1), y = sum over terms (k, c) of
    c s^k T(k, t/s) / 2^(k-1); each term is scaled by its own power of s so
    that the s -> 0 limit degenerates termwise to the monomial curve."""

    terms: tuple          # ((k, Fraction coefficient), ...), k strictly increasing
    m: int
    s: Fraction

    def __post_init__(self):
        terms = tuple((int(k), Fraction(c)) for k, c in self.terms)
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "s", Fraction(self.s))
        if self.m < 1:
            raise DivideError("leading exponent must be >= 1")
        ks = [k for k, _c in terms]
        if any(b <= a for a, b in zip(ks, ks[1:])):
            raise DivideError("term exponents must be strictly increasing")
        if not 0 < self.s <= 1:
            raise DivideError("scale must lie in (0, 1]")

    def point(self, t: float):
        s = float(self.s)
        u = t / s
        x = s ** self.m * chebyshev_eval(self.m, u) / 2.0 ** (self.m - 1)
        y = 0.0
        for k, c in self.terms:
            y += float(c) * s ** k * chebyshev_eval(k, u) / 2.0 ** (k - 1)
        return (x, y)


@dataclass(frozen=True)
class TracedCurve:
    samples: tuple = field(repr=False)   # ordered (t, x, y)
    crossings: tuple = ()                # (t1, t2, (x, y)) with t1 < t2

    def point(self, t: float):
        return self._interp(t)

    def _interp(self, t):
        ts = [p[0] for p in self.samples]
        lo, hi = 0, len(ts) - 1
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if ts[mid] <= t:
                lo = mid
            else:
                hi = mid
        t0, x0, y0 = self.samples[lo]
        t1, x1, y1 = self.samples[hi]
        if t1 == t0:
            return (x0, y0)
        w = (t - t0) / (t1 - t0)
        return (x0 + w * (x1 - x0), y0 + w * (y1 - y0))


# -- segment geometry --------------------------------------------------------


def _seg_intersect(p1, p2, p3, p4):
    """Proper intersection point of segments p1p2 and p3p4, or None."""
    x1, y1 = p1
    x2, y2 = p2
    x3, y3 = p3
    x4, y4 = p4
    dx1, dy1 = x2 - x1, y2 - y1
    dx2, dy2 = x4 - x3, y4 - y3
    den = dx1 * dy2 - dy1 * dx2
    if den == 0:
        return None
    ua = ((x3 - x1) * dy2 - (y3 - y1) * dx2) / den
    ub = ((x3 - x1) * dy1 - (y3 - y1) * dx1) / den
    if 0.0 <= ua <= 1.0 and 0.0 <= ub <= 1.0:
        return (x1 + ua * dx1, y1 + ua * dy1, ua, ub)
    return None


def _refine_crossing(fa, fb, ta, tb, h):
    """Sharpen an approximate crossing fa(ta) = fb(tb) by intersecting
    successively shorter chords around the current estimates."""
    for _ in range(80):
        a0, a1 = fa(ta - h), fa(ta + h)
        b0, b1 = fb(tb - h), fb(tb + h)
        hit = _seg_intersect(a0, a1, b0, b1)
        if hit is None:
            h *= 0.5
            if h < 1e-16:
                break
            continue
        _x, _y, ua, ub = hit
        ta = ta - h + 2 * h * ua
        tb = tb - h + 2 * h * ub
        pa, pb = fa(ta), fb(tb)
        err = math.hypot(pa[0] - pb[0], pa[1] - pb[1])
        if err < COORD_TOL and h < 1e-5:
            break
        h *= 0.5
        if h < 1e-16:
            break
    pa, pb = fa(ta), fb(tb)
    if math.hypot(pa[0] - pb[0], pa[1] - pb[1]) > 100 * COORD_TOL:
        raise TangencyDetected(
            "crossing refinement stalled; raise resolution or perturb the curve"
        )
    return ta, tb, ((pa[0] + pb[0]) / 2, (pa[1] + pb[1]) / 2)


def _velocity(f, t, h=1e-7):
    (x1, y1), (x0, y0) = f(t + h), f(t - h)
    return ((x1 - x0) / (2 * h), (y1 - y0) / (2 * h))


def _crossing_sign(f, t1, g, t2, xscale=1.0, yscale=1.0):
    """Sign of the crossing of strand f at t1 with strand g at t2.

    Transversality is judged after normalizing by the picture's coordinate
    extents; the positive rescaling leaves the sign unchanged but keeps the
    angle threshold meaningful for very anisotropic curves."""
    v1 = _velocity(f, t1)
    v2 = _velocity(g, t2)
    v1 = (v1[0] / xscale, v1[1] / yscale)
    v2 = (v2[0] / xscale, v2[1] / yscale)
    n1 = math.hypot(*v1)
    n2 = math.hypot(*v2)
    cross = v1[0] * v2[1] - v1[1] * v2[0]
    if n1 == 0 or n2 == 0 or abs(cross) / (n1 * n2) < SEPARATION_TOL:
        raise TangencyDetected("near-tangential meeting of strands")
    return 1 if cross > 0 else -1


def _extents(samples):
    xs = [p[1] for p in samples]
    ys = [p[2] for p in samples]
    return (
        max(max(xs) - min(xs), 1e-300),
        max(max(ys) - min(ys), 1e-300),
    )


def _segment_pairs(pts_a, pts_b, same):
    """Candidate intersecting segment pairs via spatial hashing of
    bounding boxes; for same=True adjacent segments are excluded."""
    def boxes(pts):
        return [
            (
                min(pts[i][1], pts[i + 1][1]),
                min(pts[i][2], pts[i + 1][2]),
                max(pts[i][1], pts[i + 1][1]),
                max(pts[i][2], pts[i + 1][2]),
            )
            for i in range(len(pts) - 1)
        ]

    bxa = boxes(pts_a)
    bxb = bxa if same else boxes(pts_b)
    cell = max(
        max(bx[2] - bx[0], bx[3] - bx[1], 1e-12) for bx in bxa + bxb
    )
    grid = {}
    for j, bx in enumerate(bxb):
        for cx in range(int(bx[0] // cell), int(bx[2] // cell) + 1):
            for cy in range(int(bx[1] // cell), int(bx[3] // cell) + 1):
                grid.setdefault((cx, cy), []).append(j)
    out = set()
    for i, bx in enumerate(bxa):
        seen = set()
        for cx in range(int(bx[0] // cell), int(bx[2] // cell) + 1):
            for cy in range(int(bx[1] // cell), int(bx[3] // cell) + 1):
                for j in grid.get((cx, cy), ()):
                    if j in seen:
                        continue
                    seen.add(j)
                    if same and abs(i - j) <= 1:
                        continue
                    if same and j < i:
                        continue
                    ob = bxb[j]
                    if (
                        bx[0] <= ob[2]
                        and ob[0] <= bx[2]
                        and bx[1] <= ob[3]
                        and ob[1] <= bx[3]
                    ):
                        out.add((i, j))
    return sorted(out)


def _polyline_crossings(fa, pts_a, fb, pts_b, same):
    """Refined transversal intersections between two sampled curves."""
    found = []
    for i, j in _segment_pairs(pts_a, pts_b, same):
        hit = _seg_intersect(
            pts_a[i][1:], pts_a[i + 1][1:], pts_b[j][1:], pts_b[j + 1][1:]
        )
        if hit is None:
            continue
        ta = pts_a[i][0] + hit[2] * (pts_a[i + 1][0] - pts_a[i][0])
        tb = pts_b[j][0] + hit[3] * (pts_b[j + 1][0] - pts_b[j][0])
        h = max(pts_a[i + 1][0] - pts_a[i][0], pts_b[j + 1][0] - pts_b[j][0])
        ta, tb, pt = _refine_crossing(fa, fb, ta, tb, h)
        if same and tb < ta:
            ta, tb = tb, ta
        if same and abs(ta - tb) < SEPARATION_TOL:
            continue
        for t1, t2, q in found:
            if math.hypot(pt[0] - q[0], pt[1] - q[1]) < SEPARATION_TOL:
                if abs(t1 - ta) < SEPARATION_TOL and abs(t2 - tb) < SEPARATION_TOL:
                    break
                raise TriplePoint(
                    "three strands through one point; perturb the curve"
                )
        else:
            found.append((ta, tb, pt))
    found.sort()
    return found


# -- tracing -----------------------------------------------------------------


def trace(
    curve: ParamCurve,
    samples: int = 4096,
    span: float = 2.0,
    radius: float = None,
) -> TracedCurve:
    """Sample the curve over t in s*[-span, span], locate all double points,
    and clip the parameter range to the smallest disk containing every
    crossing with a 10% margin, leaving exactly one exit per end.  An
    explicit working-disk radius overrides the automatic scaling (used when
    several curves must share one disk)."""
    s = float(curve.s)
    t_lo, t_hi = -span * s, span * s
    pts = []
    for i in range(samples + 1):
        t = t_lo + (t_hi - t_lo) * i / samples
        x, y = curve.point(t)
        pts.append((t, x, y))

    raw = _polyline_crossings(curve.point, pts, curve.point, pts, same=True)

    if radius is None:
        if raw:
            radius = DISK_MARGIN * max(math.hypot(*pt) for _a, _b, pt in raw)
        else:
            radius = DISK_MARGIN * max(
                math.hypot(x, y) for _t, x, y in pts[samples // 4 : 3 * samples // 4]
            )

    def outside(t):
        return math.hypot(*curve.point(t)) - radius

    inner_lo = min([t1 for t1, _t2, _p in raw], default=0.0)
    inner_hi = max([t2 for _t1, t2, _p in raw], default=0.0)
    lo, hi = t_lo, t_hi
    if outside(t_lo) > 0:
        a, b = t_lo, inner_lo
        for _ in range(100):
            mid = (a + b) / 2
            if outside(mid) > 0:
                a = mid
            else:
                b = mid
        lo = b
    if outside(t_hi) > 0:
        a, b = inner_hi, t_hi
        for _ in range(100):
            mid = (a + b) / 2
            if outside(mid) > 0:
                b = mid
            else:
                a = mid
        hi = a

    clipped = [(t, x, y) for t, x, y in pts if lo <= t <= hi]
    clipped = [(lo, *curve.point(lo))] + clipped + [(hi, *curve.point(hi))]
    clipped = [p for i, p in enumerate(clipped) if i == 0 or p[0] > clipped[i - 1][0]]
    crossings = tuple((t1, t2, pt) for t1, t2, pt in raw if lo < t1 and t2 < hi)
    if len(crossings) != len(raw):
        raise DivideError("disk clipping dropped a crossing")
    ex, ey = _extents(clipped)
    for t1, t2, _pt in crossings:
        _crossing_sign(curve.point, t1, curve.point, t2, ex, ey)  # tangency guard
    return TracedCurve(samples=tuple(clipped), crossings=crossings)


def combinatorialize(tc: TracedCurve, curve: ParamCurve = None) -> Divide:
    """Exact divide from a traced curve: crossings ordered along the
    parameter, strand interleaving from the local crossing geometry."""
    f = curve.point if curve is not None else tc.point
    ex, ey = _extents(tc.samples)
    chords = []
    for idx, (t1, t2, _pt) in enumerate(tc.crossings):
        sign = _crossing_sign(f, t1, f, t2, ex, ey)
        chords.append(((0, (t1, idx)), (0, (t2, idx)), sign))
    return divide_from_chords(1, chords)


def pair_intersections(tc1: TracedCurve, tc2: TracedCurve) -> int:
    """Number of transversal meeting points of two traced curves."""
    hits = _polyline_crossings(
        tc1.point, tc1.samples, tc2.point, tc2.samples, same=False
    )
    ex, ey = _extents(tc1.samples + tc2.samples)
    for t1, t2, _pt in hits:
        _crossing_sign(tc1.point, t1, tc2.point, t2, ex, ey)
    return len(hits)


# -- curve grammar -----------------------------------------------------------

_X_RE = re.compile(r"^x=t\^?(\d+)$")
_TERM_RE = re.compile(r"^([+-]?[\d./]*)\*?t\^?(\d+)$")


def parse_curve(text: str, scale) -> ParamCurve:
    """Parse "x=t^m; y=c1*t^k1+c2*t^k2+..." with rational coefficients."""
    parts = [p.strip().replace(" ", "") for p in text.split(";")]
    if len(parts) != 2 or not parts[1].startswith("y="):
        raise DivideError('curve grammar: "x=t^m; y=c1*t^k1+..."')
    mx = _X_RE.match(parts[0])
    if not mx:
        raise DivideError('curve grammar: x component must be "x=t^m"')
    m = int(mx.group(1))
    body = parts[1][2:]
    body = body.replace("-", "+-").lstrip("+")
    terms = []
    for piece in body.split("+"):
        if not piece:
            continue
        mt = _TERM_RE.match(piece)
        if not mt:
            raise DivideError(f"cannot parse curve term {piece!r}")
        coeff = mt.group(1)
        if coeff in ("", "+"):
            c = Fraction(1)
        elif coeff == "-":
            c = Fraction(-1)
        else:
            c = Fraction(coeff)
        terms.append((int(mt.group(2)), c))
    terms.sort()
    return ParamCurve(terms=tuple(terms), m=m, s=Fraction(scale))
