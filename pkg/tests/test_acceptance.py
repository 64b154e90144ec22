"""End-to-end acceptance checks.

Each test covers one headline criterion and emits a single pass/fail line;
run with ``pytest -v`` to see one verdict per criterion.
"""

import math
import random
import time

from dividelab import (
    alexander,
    all_divides,
    all_realizations,
    build_divide,
    cable,
    canonical_label,
    chebyshev_divide,
    combinatorialize,
    count_divides,
    counts,
    double_cusp,
    identity_suite,
    monodromy,
    puiseux_divide,
    puiseux_to_plan,
    reduction_count,
    regions,
    ribbon_fiber,
    seifert,
    trace,
    vanishing_basis,
)
from dividelab import intmat
from dividelab.tracer import ParamCurve, pair_intersections
from fractions import Fraction

from oracles import torus_alexander


def _verdict(n, ok, text):
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'} - {text}")
    assert ok, text


def _monodromy_of(d):
    return monodromy(seifert(d, vanishing_basis(d)))


def test_criterion_01_puiseux_plan_numbers():
    elapsed = math.inf
    for _ in range(5):
        t0 = time.perf_counter()
        plan_a = puiseux_to_plan([(2, 3), (2, 7)])
        plan_b = puiseux_to_plan([(2, 3), (3, 11)])
        elapsed = min(elapsed, time.perf_counter() - t0)
    ok = (
        plan_a.newton_lambdas == (3, 13)
        and plan_a.cable_exponents[1] == 9
        and plan_b.newton_lambdas[1] == 20
        and plan_b.cable_exponents[1] == 14
        and elapsed < 1e-3
    )
    _verdict(1, ok, f"cabling plans exact, {elapsed * 1e6:.0f} us")


def test_criterion_02_mu_and_delta():
    c = counts(puiseux_divide([(2, 3), (2, 7)]))
    d2 = cable(3, 14, chebyshev_divide(2, 3))
    ok = c.D == 8 and c.mu == 16 and d2.n_crossings == 22
    _verdict(2, ok, "D=8, mu=16 and 22-double-point cable")


def test_criterion_03_identity_suite_corpus(corpus):
    enumerated = [d for g in range(5) for d in all_divides(g)]
    labels = {canonical_label(d) for d in corpus}
    covered = all(canonical_label(d) in labels for d in enumerated)
    t0 = time.perf_counter()
    bad = []
    for d in corpus:
        verdicts = identity_suite(d)
        if not all(verdicts.values()):
            bad.append((d, verdicts))
    elapsed = time.perf_counter() - t0
    ok = len(corpus) >= 200 and covered and not bad and elapsed < 60
    _verdict(
        3,
        ok,
        f"identities on {len(corpus)} instances in {elapsed:.1f}s",
    )


def test_criterion_04_torus_knot_alexander_oracle():
    bad = []
    for p in range(2, 35):
        for q in range(p + 1, 35):
            if p * q > 35 or math.gcd(p, q) != 1:
                continue
            d = chebyshev_divide(p, q)
            got = list(alexander(seifert(d, vanishing_basis(d))).coeffs)
            if got != torus_alexander(p, q):
                bad.append((p, q))
    _verdict(4, not bad, f"torus Alexander oracle match, bad={bad}")


def test_criterion_05_finite_vs_infinite_order():
    T = _monodromy_of(puiseux_divide([(2, 3), (2, 7)]))
    finite_ok = intmat.is_identity(intmat.matpow(T, 156))

    dc = double_cusp()
    mu_ok = counts(dc).mu == 11
    Tdc = _monodromy_of(dc)
    t10 = intmat.matpow(Tdc, 10)
    diff = intmat.sub(t10, intmat.identity(11))
    unipotent_ok = not intmat.is_zero(diff) and intmat.is_zero(
        intmat.matmul(diff, diff)
    )
    from dividelab import order_profile

    prof = order_profile(Tdc, k_max=10 ** 6)
    ok = finite_ok and mu_ok and unipotent_ok and not prof.finite
    _verdict(5, ok, "T^156 = Id; double cusp certified infinite order")


def test_criterion_06_enumeration_series():
    t0 = time.perf_counter()
    series = [count_divides(g) for g in range(5)]
    elapsed = time.perf_counter() - t0
    ok = series == [1, 1, 2, 8, 36] and elapsed < 300
    _verdict(6, ok, f"d(g) = {series} in {elapsed:.1f}s")


def test_criterion_07_figure_eight_exclusion():
    figure_eight_charpoly = [1, -3, 1]
    bad = []
    for g in range(5):
        for d in all_realizations(g):
            if counts(d).mu != 2:
                continue
            T = _monodromy_of(d)
            if intmat.trace(T) not in (1, 2):
                bad.append(d)
            if intmat.charpoly(T) == figure_eight_charpoly:
                bad.append(d)
    _verdict(7, not bad, "no mu=2 divide carries the figure-eight monodromy")


def test_criterion_08_tracer_cross_validation():
    bad = []
    for p in range(2, 35):
        for q in range(p + 1, 35):
            if p * q > 35 or math.gcd(p, q) != 1:
                continue
            c = ParamCurve(terms=((q, 1),), m=p, s=Fraction(1, 2))
            tc = trace(c)
            if len(tc.crossings) != (p - 1) * (q - 1) // 2:
                bad.append((p, q, "count"))
                continue
            got = canonical_label(combinatorialize(tc, c))
            if got != canonical_label(chebyshev_divide(p, q)):
                bad.append((p, q, "label"))

    outer = ParamCurve(terms=((6, 1), (7, 1)), m=4, s=Fraction(1, 2))
    t_outer = trace(outer)
    shared = 1.1 * max(math.hypot(x, y) for _t, x, y in t_outer.samples)
    inner = ParamCurve(terms=((3, 1),), m=2, s=Fraction(63, 500))
    t_inner = trace(inner, radius=shared)
    lam2 = pair_intersections(t_inner, t_outer)
    ok = not bad and lam2 == 13
    _verdict(8, ok, f"tracer sweep clean, stage intersections = {lam2}")


def test_criterion_09_ribbon_fiber(corpus):
    divides = list(corpus) + [build_divide([(0, 1, 2, 3)], [], [(0, 3), (1, 2)])]
    bad = []
    for d in divides:
        c = counts(d)
        rib = ribbon_fiber(d)
        if rib.euler_char != 1 - c.mu:
            bad.append((d, "euler"))
        if rib.boundary_count != c.r_open + 2 * c.r_closed:
            bad.append((d, "boundary"))
        if c.r_open == 1 and c.r_closed == 0 and rib.genus != c.D:
            bad.append((d, "genus"))
    _verdict(9, not bad, f"ribbon relations on {len(divides)} divides")


def test_criterion_10_triangle_move_invariance(corpus):
    from dividelab import apply_move_III

    candidates = []
    for d in corpus:
        rd = regions(d)
        for i, r in enumerate(rd.regions):
            if r.touches_boundary or len(r.darts) != 3:
                continue
            if any(isinstance(h, tuple) for h in r.darts):
                continue
            if len({d.site[h][1] for h in r.darts}) != 3:
                continue
            candidates.append((d, i))
    rng = random.Random(20260824)
    rng.shuffle(candidates)
    applied = 0
    bad = []
    for d, face in candidates:
        if applied >= 100:
            break
        d2 = apply_move_III(d, face)
        applied += 1
        sd, sd2 = (
            seifert(x, vanishing_basis(x)) for x in (d, d2)
        )
        before = (
            counts(d).mu,
            intmat.trace(monodromy(sd)),
            alexander(sd).coeffs,
        )
        after = (
            counts(d2).mu,
            intmat.trace(monodromy(sd2)),
            alexander(sd2).coeffs,
        )
        if before != after:
            bad.append((d, face))
    ok = applied == 100 and not bad
    _verdict(10, ok, f"{applied} triangle moves, invariants unchanged")


def test_criterion_11_reduction_counts():
    ok = (
        reduction_count([(2, 3), (2, 7)]) == 2
        and reduction_count([(2, 3)]) == 0
        and reduction_count([(3, 5)]) == 0
        and reduction_count([(2, 9)]) == 0
    )
    _verdict(11, ok, "reduction system sizes")
