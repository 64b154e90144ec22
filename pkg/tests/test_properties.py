"""Property-based checks over randomly generated divides."""

from hypothesis import assume, given, settings, strategies as st

from dividelab import (
    alexander,
    canonical_label,
    chebyshev_divide,
    counts,
    divide_from_chords,
    from_json,
    identity_suite,
    monodromy,
    ribbon_fiber,
    seifert,
    vanishing_basis,
)
from dividelab import intmat
from dividelab.errors import DivideError


@st.composite
def random_divides(draw):
    """A connected one-interval divide from a random chord diagram."""
    g = draw(st.integers(min_value=1, max_value=4))
    positions = list(range(2 * g))
    pairs = []
    while positions:
        first = positions.pop(0)
        j = draw(st.integers(min_value=0, max_value=len(positions) - 1))
        pairs.append((first, positions.pop(j)))
    signs = [draw(st.sampled_from((1, -1))) for _ in range(g)]
    crossings = [
        ((0, a), (0, b), sign) for (a, b), sign in zip(pairs, signs)
    ]
    try:
        return divide_from_chords(1, crossings)
    except DivideError:
        assume(False)


@given(random_divides())
@settings(max_examples=60, deadline=None)
def test_json_roundtrip_preserves_label(d):
    assert canonical_label(from_json(d.to_json())) == canonical_label(d)


@given(random_divides())
@settings(max_examples=40, deadline=None)
def test_milnor_count_relation(d):
    c = counts(d)
    assert c.mu == 2 * c.D - c.r_open + 1
    assert c.mu == c.mu_plus + c.mu_zero + c.mu_minus
    assert c.mu_zero == c.D


@given(random_divides())
@settings(max_examples=30, deadline=None)
def test_identity_suite_on_random_divides(d):
    verdicts = identity_suite(d)
    assert all(verdicts.values()), verdicts


@given(random_divides())
@settings(max_examples=30, deadline=None)
def test_alexander_degree_and_symmetry(d):
    c = counts(d)
    chi = alexander(seifert(d, vanishing_basis(d)))
    assert chi.degree == c.mu
    assert all(x == 0 for x in chi.reciprocal_defect())


@given(random_divides())
@settings(max_examples=30, deadline=None)
def test_ribbon_relations(d):
    c = counts(d)
    rib = ribbon_fiber(d)
    assert rib.euler_char == 1 - c.mu
    assert rib.boundary_count == 1
    assert rib.genus == c.D


@given(random_divides())
@settings(max_examples=20, deadline=None)
def test_monodromy_determinant_unit(d):
    T = monodromy(seifert(d, vanishing_basis(d)))
    chi = intmat.charpoly(T)
    assert chi[0] in (1, -1)  # det(T) = +-1


@given(st.integers(min_value=2, max_value=5), st.integers(min_value=3, max_value=9))
@settings(max_examples=20, deadline=None)
def test_chebyshev_counts_property(p, q):
    import math

    assume(p < q and math.gcd(p, q) == 1)
    d = chebyshev_divide(p, q)
    c = counts(d)
    assert c.D == (p - 1) * (q - 1) // 2
    assert c.mu == (p - 1) * (q - 1)
