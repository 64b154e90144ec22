"""Generate the packaged double-cusp fixture.

The two branches are small Morsifications of the cusps x^3 = y^2 and
y^3 = x^2:
    A(t) = (t^2 - a, t^3 - b t)
    B(t) = (t^3 - b t, t^2 - a)         (mirror across the diagonal)
with 0 < a < b small, clipped to a disk that keeps the two teardrop
self-crossings and the four local mutual crossings while excluding the far
transversal meeting of the two cusp tails.  The crossing times and signs
are found numerically, converted to combinatorial chord data, and the
resulting divide is frozen as JSON.

Run from the repository root:  python3 scripts/make_double_cusp.py
"""

import json
import math
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from dividelab import divide_from_chords, counts  # noqa: E402

R = 0.7
A_PARAM = 0.3
B_PARAM = 0.5
T_SPAN = 1.4


def curve_a(t):
    return (t * t - A_PARAM, t ** 3 - B_PARAM * t)


def curve_b(t):
    x, y = curve_a(t)
    return (y, x)


def vel(f, t, h=1e-7):
    (x1, y1), (x0, y0) = f(t + h), f(t - h)
    return ((x1 - x0) / (2 * h), (y1 - y0) / (2 * h))


def bisect(g, lo, hi, tol=1e-13):
    flo = g(lo)
    for _ in range(200):
        mid = (lo + hi) / 2
        fm = g(mid)
        if fm == 0 or hi - lo < tol:
            return mid
        if (flo < 0) != (fm < 0):
            hi = mid
        else:
            lo, flo = mid, fm
    return (lo + hi) / 2


def disk_interval(f):
    """Parameter interval on which f stays inside the disk of radius R."""
    def outside(t):
        x, y = f(t)
        return math.hypot(x, y) - R

    t_in = bisect(outside, -T_SPAN, 0.0) if outside(-T_SPAN) > 0 else None
    t_out = bisect(outside, 0.0, T_SPAN) if outside(T_SPAN) > 0 else None
    assert t_in is not None and t_out is not None
    # verify a single entry/exit
    n = 4000
    for i in range(1, n):
        t = t_in + (t_out - t_in) * i / n
        assert outside(t) < 0, f"curve leaves the disk at t={t}"
    return t_in, t_out


def refine_pair(f, g, t0, s0):
    """Newton refinement of f(t) = g(s)."""
    t, s = t0, s0
    for _ in range(60):
        fx, fy = f(t)
        gx, gy = g(s)
        rx, ry = fx - gx, fy - gy
        if abs(rx) + abs(ry) < 1e-14:
            break
        (dft_x, dft_y) = vel(f, t)
        (dgs_x, dgs_y) = vel(g, s)
        det = -dft_x * dgs_y + dft_y * dgs_x
        if abs(det) < 1e-12:
            break
        dt = (-rx * dgs_y + ry * dgs_x) / det
        ds = (-dft_x * ry + dft_y * rx) / det * -1
        # standard 2x2 solve of J (dt, -ds)^t = -r with J columns f', -g'
        t -= dt
        s -= ds
    return t, s


def find_crossings(f, g, ta, tb, sa, sb, same=False):
    """Grid scan + refinement for intersections of two parametrized arcs."""
    n = 400
    found = []
    for i in range(n):
        t0 = ta + (tb - ta) * (i + 0.5) / n
        for j in range(n):
            s0 = sa + (sb - sa) * (j + 0.5) / n
            if same and abs(t0 - s0) < 2.0 * (tb - ta) / n:
                continue
            fx, fy = f(t0)
            gx, gy = g(s0)
            if (fx - gx) ** 2 + (fy - gy) ** 2 > (3.0 / n) ** 2:
                continue
            t, s = refine_pair(f, g, t0, s0)
            if same and abs(t - s) < 1e-6:
                continue
            if not (ta - 1e-9 <= t <= tb + 1e-9 and sa - 1e-9 <= s <= sb + 1e-9):
                continue
            fx, fy = f(t)
            if math.hypot(fx, fy) > R:
                continue
            for (t1, s1) in found:
                if abs(t - t1) < 1e-6 and abs(s - s1) < 1e-6:
                    break
            else:
                found.append((t, s))
    return found


def main():
    a_lo, a_hi = disk_interval(curve_a)
    b_lo, b_hi = disk_interval(curve_b)
    print("A interval:", a_lo, a_hi)
    print("B interval:", b_lo, b_hi)

    records = []  # ((branch, time), (branch, time), sign)

    def sign_at(f, t, g, s):
        vx1, vy1 = vel(f, t)
        vx2, vy2 = vel(g, s)
        c = vx1 * vy2 - vy1 * vx2
        assert abs(c) > 1e-6, "tangential meeting"
        return 1 if c > 0 else -1

    self_a = find_crossings(curve_a, curve_a, a_lo, a_hi, a_lo, a_hi, same=True)
    self_a = [p for p in self_a if p[0] < p[1]]
    print("A self:", self_a, [curve_a(t) for t, _ in self_a])
    for t, s in self_a:
        records.append(((0, t), (0, s), sign_at(curve_a, t, curve_a, s)))

    self_b = find_crossings(curve_b, curve_b, b_lo, b_hi, b_lo, b_hi, same=True)
    self_b = [p for p in self_b if p[0] < p[1]]
    print("B self:", self_b, [curve_b(t) for t, _ in self_b])
    for t, s in self_b:
        records.append(((1, t), (1, s), sign_at(curve_b, t, curve_b, s)))

    mutual = find_crossings(curve_a, curve_b, a_lo, a_hi, b_lo, b_hi)
    print("mutual:", mutual, [curve_a(t) for t, _ in mutual])
    for t, s in mutual:
        records.append(((0, t), (1, s), sign_at(curve_a, t, curve_b, s)))

    assert len(records) == 6, f"expected 6 double points, got {len(records)}"

    ends = [
        (math.atan2(*reversed(curve_a(a_lo))), (0, 0)),
        (math.atan2(*reversed(curve_a(a_hi))), (0, 1)),
        (math.atan2(*reversed(curve_b(b_lo))), (1, 0)),
        (math.atan2(*reversed(curve_b(b_hi))), (1, 1)),
    ]
    ends.sort()
    endpoint_order = [e for _ang, e in ends]
    print("endpoint order (ccw):", ends)

    d = divide_from_chords(2, records, endpoint_order=endpoint_order)
    c = counts(d)
    print("counts:", c)
    assert c.D == 6 and c.r_open == 2 and c.mu == 11

    out = os.path.join(
        os.path.dirname(__file__), "..", "src", "dividelab", "data", "double_cusp.json"
    )
    os.makedirs(os.path.dirname(out), exist_ok=True)
    with open(out, "w") as fh:
        json.dump(d.to_json_obj(), fh, indent=1)
    print("wrote", out)


if __name__ == "__main__":
    main()
