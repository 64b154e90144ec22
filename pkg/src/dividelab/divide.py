"""Half-edge planar maps for divides.

A divide is stored as a combinatorial map: 4-valent interior vertices
(crossings) whose half-edges are listed in counterclockwise order, univalent
boundary endpoints listed counterclockwise along the disk boundary, and an
edge involution pairing half-edges.  Slots {0,2} and {1,3} of a crossing
belong to the two strands passing straight through.

Planarity is checked by closing the map: consecutive endpoints are joined by
boundary arcs and the resulting map on the sphere must have Euler
characteristic 2.  The face left outside the boundary circle is the "cap" and
is not a region of the divide.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    DanglingHalfEdge,
    DivideError,
    InconsistentStrands,
    NonPlanar,
    NonQuadrivalent,
)

# Arc darts of the closed map are tuples ("a", arc_index, side); divide darts
# are plain ints.  side 0 is based at endpoint i, side 1 at endpoint i+1.


@dataclass(frozen=True)
class Branch:
    """One strand of the divide: an interval or circle walk.

    ``darts`` is the full half-edge sequence along the walk: consecutive pairs
    alternate between edge traversals and strand-through passages at
    crossings.  Open walks start and end with endpoint half-edges.
    """

    closed: bool
    darts: tuple


class Divide:
    """Validated immutable divide.  Construct through :func:`build_divide`."""

    __slots__ = (
        "crossings",
        "endpoints",
        "edges",
        "branches",
        "partner",
        "site",
        "_cache",
    )

    def __init__(self, crossings, endpoints, edges, branches, partner, site):
        self.crossings = crossings
        self.endpoints = endpoints
        self.edges = edges
        self.branches = branches
        self.partner = partner
        self.site = site
        self._cache = {}

    # -- basic queries -------------------------------------------------

    @property
    def n_crossings(self):
        return len(self.crossings)

    def opposite(self, dart):
        """Other half-edge of the same strand at the same crossing."""
        kind, ci, slot = self.site[dart]
        if kind != "c":
            raise DivideError(f"half-edge {dart} is not at a crossing")
        return self.crossings[ci][(slot + 2) % 4]

    def r_open(self):
        return sum(1 for b in self.branches if not b.closed)

    def r_closed(self):
        return sum(1 for b in self.branches if b.closed)

    def is_connected(self):
        verts = self._vertex_adjacency()
        if not verts:
            return True
        seen = set()
        stack = [next(iter(verts))]
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            stack.extend(verts[v])
        return len(seen) == len(verts)

    def _vertex_adjacency(self):
        adj = {}
        for ci in range(len(self.crossings)):
            adj.setdefault(("c", ci), set())
        for ei in range(len(self.endpoints)):
            adj.setdefault(("e", ei), set())
        for h, k in self.edges:
            a = self.site[h][:2]
            b = self.site[k][:2]
            adj[a].add(b)
            adj[b].add(a)
        return adj

    # -- closed map ----------------------------------------------------

    def closed_map(self):
        """Rotation successor and edge involution of the closed-up map.

        Returns ``(succ, alpha, all_darts)``.  ``succ`` maps each dart to the
        next dart counterclockwise around its vertex; ``alpha`` is the edge
        involution extended over the boundary arcs.
        """
        if "closed_map" in self._cache:
            return self._cache["closed_map"]
        succ = {}
        alpha = {}
        for cr in self.crossings:
            for i in range(4):
                succ[cr[i]] = cr[(i + 1) % 4]
        for h, k in self.edges:
            alpha[h] = k
            alpha[k] = h
        n_e = len(self.endpoints)
        darts = [h for cr in self.crossings for h in cr] + list(self.endpoints)
        if n_e:
            for i, h in enumerate(self.endpoints):
                a_out = ("a", i, 0)
                a_in = ("a", (i - 1) % n_e, 1)
                # counterclockwise at a boundary point: arc toward the next
                # endpoint, the inward half-edge, arc toward the previous one
                succ[a_out] = h
                succ[h] = a_in
                succ[a_in] = a_out
                alpha[("a", i, 0)] = ("a", i, 1)
                alpha[("a", i, 1)] = ("a", i, 0)
                darts.append(("a", i, 0))
                darts.append(("a", i, 1))
        self._cache["closed_map"] = (succ, alpha, darts)
        return self._cache["closed_map"]

    def faces(self):
        """Orbits of the face permutation of the closed map, plus the cap.

        Returns ``(orbits, face_of, cap_index)`` where ``face_of`` maps each
        dart to its orbit index.  ``cap_index`` is the index of the outside
        face (None when the divide has no endpoints; then the outer face is
        the one containing the smallest divide dart, and it plays the cap
        role for bounded/unbounded bookkeeping).
        """
        if "faces" in self._cache:
            return self._cache["faces"]
        succ, alpha, darts = self.closed_map()
        face_of = {}
        orbits = []
        for start in darts:
            if start in face_of:
                continue
            orbit = []
            h = start
            while h not in face_of:
                face_of[h] = len(orbits)
                orbit.append(h)
                h = succ[alpha[h]]
            orbits.append(tuple(orbit))
        if self.endpoints:
            cap = face_of[("a", 0, 0)]
        elif self.crossings:
            cap = face_of[min(h for cr in self.crossings for h in cr)]
        else:
            cap = None
        self._cache["faces"] = (orbits, face_of, cap)
        return self._cache["faces"]

    # -- serialization -------------------------------------------------

    def to_json_obj(self):
        from .canonical import crossing_order

        order = crossing_order(self)
        return {
            "crossings": [list(self.crossings[ci]) for ci in order],
            "endpoints": list(self.endpoints),
            "edges": sorted([list(e) for e in self.edges]),
        }

    def to_json(self):
        return json.dumps(self.to_json_obj())

    def __repr__(self):
        return (
            f"Divide(D={len(self.crossings)}, endpoints={len(self.endpoints)},"
            f" branches={len(self.branches)})"
        )


def build_divide(crossings, endpoints, edges) -> Divide:
    """Validate raw half-edge lists and derive branch walks.

    Raises NonQuadrivalent, DanglingHalfEdge, NonPlanar or
    InconsistentStrands when the data does not describe a divide in the disk.
    """
    crossings = tuple(tuple(int(h) for h in cr) for cr in crossings)
    endpoints = tuple(int(h) for h in endpoints)

    site = {}
    for ci, cr in enumerate(crossings):
        if len(cr) != 4:
            raise NonQuadrivalent(f"crossing {ci} has {len(cr)} half-edges")
        for slot, h in enumerate(cr):
            if h in site:
                raise DanglingHalfEdge(f"half-edge {h} declared twice")
            site[h] = ("c", ci, slot)
    for ei, h in enumerate(endpoints):
        if h in site:
            raise DanglingHalfEdge(f"half-edge {h} declared twice")
        site[h] = ("e", ei)

    partner = {}
    norm_edges = []
    for pair in edges:
        h, k = pair
        h, k = int(h), int(k)
        if h == k:
            raise DanglingHalfEdge(f"edge pairs half-edge {h} with itself")
        for x in (h, k):
            if x not in site:
                raise DanglingHalfEdge(f"edge references undeclared half-edge {x}")
            if x in partner:
                raise DanglingHalfEdge(f"half-edge {x} used by two edges")
        partner[h] = k
        partner[k] = h
        norm_edges.append((min(h, k), max(h, k)))
    missing = [h for h in site if h not in partner]
    if missing:
        raise DanglingHalfEdge(f"half-edges without an edge: {sorted(missing)[:5]}")
    norm_edges = tuple(sorted(norm_edges))

    branches = _derive_branches(crossings, endpoints, site, partner)

    d = Divide(crossings, endpoints, norm_edges, branches, partner, site)
    _check_planarity(d)
    return d


def _derive_branches(crossings, endpoints, site, partner):
    used = set()

    def walk_from(start, stop_at_endpoint):
        seq = [start]
        used.add(start)
        h = start
        while True:
            k = partner[h]
            if k in used:
                if not stop_at_endpoint and k == start:
                    return seq  # closed walk came home
                raise InconsistentStrands("walk revisits a half-edge")
            seq.append(k)
            used.add(k)
            kind = site[k][0]
            if kind == "e":
                if not stop_at_endpoint:
                    raise InconsistentStrands("closed walk hit an endpoint")
                return seq
            _, ci, slot = site[k]
            nxt = crossings[ci][(slot + 2) % 4]
            if nxt in used:
                if not stop_at_endpoint and nxt == start:
                    return seq
                raise InconsistentStrands("strands cross through inconsistently")
            seq.append(nxt)
            used.add(nxt)
            h = nxt

    branches = []
    for h in endpoints:
        if h in used:
            continue
        branches.append(Branch(closed=False, darts=tuple(walk_from(h, True))))
    for cr in crossings:
        for h in cr:
            if h not in used:
                branches.append(Branch(closed=True, darts=tuple(walk_from(h, False))))
    return tuple(branches)


def _check_planarity(d: Divide):
    orbits, _, _ = d.faces()
    n_e = len(d.endpoints)
    V = len(d.crossings) + n_e
    E = len(d.edges) + n_e
    F = len(orbits)
    if V - E + F != 2:
        raise NonPlanar(
            f"Euler characteristic {V - E + F} != 2 (V={V}, E={E}, F={F})"
        )


# -- chord-data construction ------------------------------------------------


def divide_from_chords(n_branches, crossings, endpoint_order=None) -> Divide:
    """Build a divide of open branches from visit times along each branch.

    ``crossings`` is a list of ``((b1, u1), (b2, u2), sign)``: the crossing is
    visited by branch ``b1`` at time ``u1`` and by branch ``b2`` at time
    ``u2`` (same branch allowed, times distinct); ``sign`` is +1 when the
    ordered pair of outgoing velocities (first visit as listed, then second)
    is counterclockwise.  Times only need to be mutually comparable within a
    branch.

    ``endpoint_order`` lists ``(branch, end)`` pairs counterclockwise along
    the boundary (end 0 = start of the parametrization).  It may be omitted
    when there are at most two endpoints.
    """
    visits = [[] for _ in range(n_branches)]
    for idx, ((b1, u1), (b2, u2), sign) in enumerate(crossings):
        visits[b1].append((u1, idx, 0))
        visits[b2].append((u2, idx, 1))
    for lst in visits:
        lst.sort(key=lambda v: v[0])
        times = [v[0] for v in lst]
        if len(set(times)) != len(times):
            raise DivideError("coincident visit times on one branch")

    next_id = [0]

    def fresh():
        h = next_id[0]
        next_id[0] += 1
        return h

    # per crossing end: (in_dart, out_dart)
    cross_darts = [[None, None] for _ in crossings]
    edge_list = []
    branch_ends = []  # (start_dart, end_dart) per branch
    for b in range(n_branches):
        start = fresh()
        prev_out = start
        for _u, idx, end in visits[b]:
            h_in = fresh()
            h_out = fresh()
            cross_darts[idx][end] = (h_in, h_out)
            edge_list.append((prev_out, h_in))
            prev_out = h_out
        stop = fresh()
        edge_list.append((prev_out, stop))
        branch_ends.append((start, stop))

    crossing_tuples = []
    for idx, ((_b1, _u1), (_b2, _u2), sign) in enumerate(crossings):
        (in_a, out_a), (in_b, out_b) = cross_darts[idx]
        if sign > 0:
            crossing_tuples.append((out_a, out_b, in_a, in_b))
        else:
            crossing_tuples.append((out_a, in_b, in_a, out_b))

    if endpoint_order is None:
        if n_branches != 1:
            raise DivideError("endpoint_order required for multi-branch data")
        endpoint_order = [(0, 0), (0, 1)]
    endpoints = [branch_ends[b][end] for b, end in endpoint_order]

    return build_divide(crossing_tuples, endpoints, edge_list)


# -- JSON -------------------------------------------------------------------


def from_json_obj(obj) -> Divide:
    try:
        crossings = obj["crossings"]
        endpoints = obj["endpoints"]
        edges = obj["edges"]
    except (KeyError, TypeError) as exc:
        raise DivideError(f"malformed divide JSON: {exc}") from None
    return build_divide(crossings, endpoints, edges)


def from_json(text: str) -> Divide:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DivideError(f"invalid JSON: {exc}") from None
    return from_json_obj(obj)
