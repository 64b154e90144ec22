import pytest

from dividelab import (
    build_divide,
    chebyshev_divide,
    counts,
    divide_from_chords,
    puiseux_divide,
    regions,
)
from dividelab.errors import Disconnected


def test_chord_has_no_bounded_region():
    d = build_divide([], [0, 1], [(0, 1)])
    c = counts(d)
    assert (c.D, c.b, c.mu) == (0, 0, 0)


def test_teardrop_counts():
    d = divide_from_chords(1, [((0, 0), (0, 1), 1)])
    c = counts(d)
    assert c.D == 1
    assert c.b == 1
    assert c.mu == 2
    assert c.mu_zero == 1
    # the lone monogon is a single extremum; its sign depends on chirality
    assert sorted((c.mu_plus, c.mu_minus)) == [0, 1]


def test_teardrop_monogon():
    d = divide_from_chords(1, [((0, 0), (0, 1), 1)])
    rd = regions(d)
    bounded = [r for r in rd.regions if r.bounded]
    assert len(bounded) == 1
    mono = bounded[0]
    assert len(mono.darts) == 1
    assert mono.corners == {0: 1}


def test_chebyshev_counts():
    for p, q in [(2, 3), (2, 5), (3, 4), (3, 5), (4, 5)]:
        c = counts(chebyshev_divide(p, q))
        assert c.D == (p - 1) * (q - 1) // 2
        assert c.mu == (p - 1) * (q - 1)
        assert c.b == c.D  # one-interval divides: b = delta
        assert c.mu == 2 * c.D - c.r_open + 1


def test_signs_alternate_across_edges():
    d = chebyshev_divide(3, 4)
    rd = regions(d)
    for h, k in d.edges:
        a = rd.face_lookup[h]
        b = rd.face_lookup[k]
        assert rd.signs[a] == -rd.signs[b]


def test_critical_assignment_blocks():
    d = puiseux_divide([(2, 3), (2, 7)])
    rd = regions(d)
    kinds = [kind for kind, _ in rd.critical_assignment]
    assert kinds.count("saddle") == d.n_crossings
    assert kinds.count("max") + kinds.count("min") == rd.n_bounded


def test_closed_branch_regions():
    d = build_divide([(0, 1, 2, 3)], [], [(0, 3), (1, 2)])
    c = counts(d)
    assert (c.D, c.r_open, c.r_closed) == (1, 0, 1)
    assert c.mu == 2 * c.D - (c.r_open + c.r_closed) + 1 + 1  # circle adds 1


def test_disconnected_rejected():
    d = build_divide([], [0, 1, 2, 3], [(0, 1), (2, 3)])
    with pytest.raises(Disconnected):
        regions(d)
