from dividelab import (
    build_divide,
    chebyshev_divide,
    counts,
    double_cusp,
    puiseux_divide,
    ribbon_fiber,
)


def _check(d):
    c = counts(d)
    rib = ribbon_fiber(d)
    assert rib.euler_char == 1 - c.mu
    assert rib.boundary_count == c.r_open + 2 * c.r_closed
    assert rib.euler_char == 2 - 2 * rib.genus - rib.boundary_count


def test_chord():
    d = build_divide([], [0, 1], [(0, 1)])
    rib = ribbon_fiber(d)
    assert (rib.euler_char, rib.genus, rib.boundary_count) == (1, 0, 1)
    _check(d)


def test_torus_divides():
    for p, q in [(2, 3), (2, 5), (3, 4), (3, 5), (4, 5)]:
        d = chebyshev_divide(p, q)
        _check(d)
        assert ribbon_fiber(d).genus == d.n_crossings


def test_iterated():
    d = puiseux_divide([(2, 3), (2, 7)])
    _check(d)
    assert ribbon_fiber(d).genus == 8


def test_double_cusp_fixture():
    _check(double_cusp())


def test_closed_branch():
    d = build_divide([(0, 1, 2, 3)], [], [(0, 3), (1, 2)])
    rib = ribbon_fiber(d)
    assert rib.boundary_count == 2
    _check(d)
