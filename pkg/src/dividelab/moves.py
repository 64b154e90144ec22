"""Admissible modifications of divides: triangle moves and connected sums.

The triangle move slides one strand of a three-strand triangle across the
opposite crossing.  Crossings keep their rotation tuples; only the edge
involution changes: the three triangle sides flip to the sector darts behind
the corners, and every edge attached behind a corner transfers to the sector
dart on the other side of the same strand.
"""

from __future__ import annotations

from .divide import Divide, build_divide
from .errors import BoundaryFace, NotAnEndpoint, NotATriangle
from .regions import regions


def apply_move_III(d: Divide, face: int) -> Divide:
    """Flip the triangular region ``face`` (an index into regions(d))."""
    rd = regions(d)
    if not 0 <= face < len(rd.regions):
        raise NotATriangle(f"no region {face}")
    region = rd.regions[face]
    orbit = region.darts
    if region.touches_boundary:
        raise BoundaryFace("triangle move needs an interior region")
    if len(orbit) != 3 or any(isinstance(h, tuple) for h in orbit):
        raise NotATriangle(f"region {face} is not bounded by three edges")
    corners = [d.site[h][1] for h in orbit]
    if len(set(corners)) != 3:
        raise NotATriangle("triangle corners must be three distinct crossings")

    v = list(orbit)
    u = [d.partner[h] for h in v]
    v_op = [d.opposite(h) for h in v]
    u_op = [d.opposite(h) for h in u]
    side_edges = {frozenset((v[i], u[i])) for i in range(3)}

    # behind each corner, the strand continuation moves to the sector dart
    # across the triangle on the same strand
    relabel = {}
    for i in range(3):
        relabel[v_op[i]] = u[i]
        relabel[u_op[i]] = v[i]

    new_edges = [(v_op[i], u_op[i]) for i in range(3)]
    for h, k in d.edges:
        if frozenset((h, k)) in side_edges:
            continue
        new_edges.append((relabel.get(h, h), relabel.get(k, k)))

    return build_divide(d.crossings, d.endpoints, new_edges)


def connected_sum(d1: Divide, d2: Divide, e1: int, e2: int) -> Divide:
    """Join two divides by merging one boundary endpoint of each.

    ``e1``/``e2`` are endpoint indices (positions along the boundary).  The
    two chosen endpoints are fused: their strands become one, and the two
    boundary circles are spliced at that point.
    """
    for d, e in ((d1, e1), (d2, e2)):
        if not 0 <= e < len(d.endpoints):
            raise NotAnEndpoint(f"endpoint index {e} out of range")

    # relabel d2's half-edges past d1's
    offset = 1 + max(
        (h for cr in d1.crossings for h in cr),
        default=-1,
    )
    offset = max(offset, 1 + max(d1.endpoints, default=-1))

    def sh(h):
        return h + offset

    crossings = list(d1.crossings) + [tuple(sh(h) for h in cr) for cr in d2.crossings]

    h1 = d1.endpoints[e1]
    h2 = sh(d2.endpoints[e2])
    p1 = d1.partner[h1]
    p2 = sh(d2.partner[d2.endpoints[e2]])

    edges = []
    for h, k in d1.edges:
        if frozenset((h, k)) != frozenset((h1, p1)):
            edges.append((h, k))
    for h, k in d2.edges:
        if frozenset((h, k)) != frozenset((d2.endpoints[e2], d2.partner[d2.endpoints[e2]])):
            edges.append((sh(h), sh(k)))
    edges.append((p1, p2))

    n1 = len(d1.endpoints)
    n2 = len(d2.endpoints)
    endpoints = [
        d1.endpoints[(e1 + 1 + i) % n1] for i in range(n1 - 1)
    ] + [
        sh(d2.endpoints[(e2 + 1 + i) % n2]) for i in range(n2 - 1)
    ]

    return build_divide(crossings, endpoints, edges)
