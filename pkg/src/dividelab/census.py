"""Enumeration of connected one-interval-branch divides by double points.

A candidate is a double-occurrence word (Gauss code) over g letters; each
letter is a crossing met twice along the arc.  Every code is expanded over
the 2^g local interleaving choices at its crossings; the chord-data builder
keeps exactly the rotation systems that close up to a sphere with the
endpoints on the boundary.

The headline series d(g) counts prime divides (no separating arc cutting a
single edge, i.e. not a connected sum of smaller divides) modulo the curl
slide: two small loops traversed in immediate succession can be slid past
one another along the strand, exchanging their chiralities, without changing
the link of the divide.  The finer census of all realizations up to
canonical label is exposed separately.
"""

from __future__ import annotations

from dataclasses import dataclass

from .canonical import canonical_label
from .divide import divide_from_chords
from .errors import DivideError


@dataclass(frozen=True)
class GaussCode:
    """Double-occurrence word; letters are 0..g-1 in order of first visit."""

    word: tuple

    def __post_init__(self):
        word = tuple(int(x) for x in self.word)
        object.__setattr__(self, "word", word)
        seen = {}
        for x in word:
            seen[x] = seen.get(x, 0) + 1
        if any(v != 2 for v in seen.values()):
            raise DivideError("each letter must occur exactly twice")

    @property
    def g(self):
        return len(self.word) // 2


def candidate_codes(g: int):
    """All double-occurrence words of length 2g up to letter renaming."""
    def pairings(positions):
        if not positions:
            yield []
            return
        first = positions[0]
        rest = positions[1:]
        for i, second in enumerate(rest):
            for tail in pairings(rest[:i] + rest[i + 1 :]):
                yield [(first, second)] + tail

    for matching in pairings(tuple(range(2 * g))):
        word = [0] * (2 * g)
        for letter, (a, b) in enumerate(sorted(matching)):
            word[a] = letter
            word[b] = letter
        yield GaussCode(tuple(word))


def is_prime(code: GaussCode) -> bool:
    """True when the arc cannot be split into two letter-disjoint halves.

    A proper split w = w1 w2 with disjoint alphabets means a boundary arc
    cuts one edge of the divide and separates the double points: the divide
    is a connected sum.  The empty code (the plain chord) counts as prime.
    """
    seen = set()
    depth = 0
    for c in code.word[:-1]:
        if c in seen:
            depth -= 1
        else:
            seen.add(c)
            depth += 1
        if depth == 0:
            return False
    return True


def _visits(word):
    out = {}
    for pos, c in enumerate(word):
        out.setdefault(c, []).append(pos)
    return out


def _tandem_curls(word):
    """Pairs of curls traversed back to back along the arc.

    A curl is a crossing whose two visits are adjacent, so its loop is an
    empty lobe; two curls form a tandem when the second starts immediately
    after the first ends.  Sliding one through the other swaps their
    chiralities and preserves the link.
    """
    v = _visits(word)
    g = len(word) // 2
    curls = [c for c in range(g) if v[c][1] - v[c][0] == 1]
    return [
        (x, y) for x in curls for y in curls if v[y][0] == v[x][1] + 1
    ]


def realizations(code: GaussCode):
    """All distinct divides in the disk whose arc traversal reads ``code``.

    Brute force over the two transversal-interleaving choices per crossing;
    non-planar rotation systems are discarded.  One representative per
    canonical label is returned.
    """
    g = code.g
    visits = _visits(code.word)
    out = {}
    for mask in range(1 << g):
        crossings = [
            ((0, visits[c][0]), (0, visits[c][1]), 1 if mask >> c & 1 else -1)
            for c in range(g)
        ]
        try:
            d = divide_from_chords(1, crossings)
        except DivideError:
            continue
        out.setdefault(canonical_label(d), d)
    return [out[k] for k in sorted(out)]


def _census(g: int):
    """Label -> divide for the counted classes: prime words, realizations
    folded together along curl slides; the returned representative carries
    the least canonical label of its class."""
    union = {}
    rep = {}

    def find(x):
        while union[x] != x:
            union[x] = union[union[x]]
            x = union[x]
        return x

    def merge(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            union[max(ra, rb)] = min(ra, rb)

    for code in candidate_codes(g):
        if not is_prime(code):
            continue
        visits = _visits(code.word)
        tandems = _tandem_curls(code.word)

        def build(signs):
            try:
                return divide_from_chords(
                    1,
                    [
                        ((0, visits[c][0]), (0, visits[c][1]), signs[c])
                        for c in range(g)
                    ],
                )
            except DivideError:
                return None

        for mask in range(1 << g):
            signs = [1 if mask >> c & 1 else -1 for c in range(g)]
            d = build(signs)
            if d is None:
                continue
            lab = canonical_label(d)
            union.setdefault(lab, lab)
            rep.setdefault(lab, d)
            for x, y in tandems:
                slid = list(signs)
                slid[x], slid[y] = slid[y], slid[x]
                if slid == signs:
                    continue
                d2 = build(slid)
                if d2 is not None:
                    lab2 = canonical_label(d2)
                    union.setdefault(lab2, lab2)
                    rep.setdefault(lab2, d2)
                    merge(lab, lab2)
    return {root: rep[root] for root in sorted({find(x) for x in union})}


def count_divides(g: int) -> int:
    """d(g): prime one-interval divides with g double points, up to
    homeomorphism and curl slides."""
    return len(_census(g))


def all_divides(g: int):
    """One representative divide per counted class, sorted by label."""
    census = _census(g)
    return [census[k] for k in sorted(census)]


def all_realizations(g: int):
    """Every realization class (including connected sums), sorted by label.

    The finer census: one divide per canonical label over all candidate
    codes.  Used as a bulk test corpus.
    """
    out = {}
    for code in candidate_codes(g):
        for d in realizations(code):
            out.setdefault(canonical_label(d), d)
    return [out[k] for k in sorted(out)]
