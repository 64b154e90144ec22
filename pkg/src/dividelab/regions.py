"""Region structure of a divide: faces, chessboard coloring, counts.

Regions are the connected components of the disk minus the divide.  Bounded
regions come first, in canonical order; sign convention: the region on the
face-traversal side of the first endpoint's half-edge is declared -, all
other signs follow by alternation across edges.  For endpoint-free divides
the outer region is the anchor and is declared -.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .canonical import dart_rank
from .divide import Divide
from .errors import Disconnected, DivideError


@dataclass(frozen=True)
class Region:
    darts: tuple  # face orbit of the closed map (divide darts and arc darts)
    edge_circuit: tuple  # divide edges along the orbit
    corners: dict  # crossing index -> multiplicity (sector count)
    touches_boundary: bool

    @property
    def bounded(self):
        return not self.touches_boundary


@dataclass(frozen=True)
class RegionData:
    regions: tuple  # bounded regions first (canonical order), then unbounded
    signs: tuple  # +1 / -1 per region, aligned with .regions
    critical_assignment: tuple  # ("max"/"min", region id) and ("saddle", crossing)
    n_bounded: int
    face_lookup: dict = field(repr=False, default_factory=dict)  # dart -> region id


def regions(d: Divide) -> RegionData:
    if "region_data" in d._cache:
        return d._cache["region_data"]
    if not d.is_connected():
        raise Disconnected("region coloring requires a connected divide")
    orbits, face_of, cap = d.faces()
    site = d.site

    # with endpoints the cap face lies outside the disk; without endpoints it
    # is the outer region itself and must be kept (marked unbounded)
    outer_is_region = not d.endpoints
    recs = []
    for fi, orbit in enumerate(orbits):
        if fi == cap and not outer_is_region:
            continue
        corners = {}
        circuit = []
        touches = fi == cap
        for h in orbit:
            if isinstance(h, tuple):
                touches = True
                continue
            k = d.partner[h]
            circuit.append((min(h, k), max(h, k)))
            s = site[h]
            if s[0] == "c":
                corners[s[1]] = corners.get(s[1], 0) + 1
        recs.append((fi, Region(tuple(orbit), tuple(circuit), corners, touches)))

    rank = dart_rank(d)

    def region_key(rec):
        _fi, r = rec
        ds = tuple(rank[h] for h in r.darts if not isinstance(h, tuple))
        if not ds:
            return (1, ())
        rots = [ds[i:] + ds[:i] for i in range(len(ds))]
        return (0, min(rots))

    bounded = sorted((rec for rec in recs if rec[1].bounded), key=region_key)
    unbounded = sorted((rec for rec in recs if not rec[1].bounded), key=region_key)
    ordered = bounded + unbounded
    face_to_region = {fi: i for i, (fi, _r) in enumerate(ordered)}
    region_list = tuple(r for _fi, r in ordered)

    face_lookup = {}
    for h, fi in face_of.items():
        if fi in face_to_region:
            face_lookup[h] = face_to_region[fi]

    signs = _chessboard(d, region_list, face_lookup)

    assignment = []
    for i, r in enumerate(region_list):
        if r.bounded:
            assignment.append(("max" if signs[i] > 0 else "min", i))
    for ci in range(len(d.crossings)):
        assignment.append(("saddle", ci))

    rd = RegionData(
        regions=region_list,
        signs=tuple(signs),
        critical_assignment=tuple(assignment),
        n_bounded=len(bounded),
        face_lookup=face_lookup,
    )
    d._cache["region_data"] = rd
    return rd


def _chessboard(d: Divide, region_list, face_lookup):
    n = len(region_list)
    adj = [set() for _ in range(n)]
    for h, k in d.edges:
        a = face_lookup[h]
        b = face_lookup[k]
        if a == b:
            raise DivideError("region touches an edge on both sides; not 2-colorable")
        adj[a].add(b)
        adj[b].add(a)

    if d.endpoints:
        anchor = face_lookup[d.endpoints[0]]
    else:
        # endpoint-free divide: the outer face anchors the coloring
        _orbits, face_of, cap = d.faces()
        anchor = next(
            face_lookup[h] for h, fi in face_of.items() if fi == cap
        )

    signs = [0] * n
    signs[anchor] = -1
    stack = [anchor]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if signs[w] == 0:
                signs[w] = -signs[v]
                stack.append(w)
            elif signs[w] != -signs[v]:
                raise DivideError("chessboard coloring does not exist")
    if any(s == 0 for s in signs):
        raise DivideError("region adjacency is not connected")
    return signs


@dataclass(frozen=True)
class DivideCounts:
    D: int
    r_open: int
    r_closed: int
    b: int
    mu: int
    mu_plus: int
    mu_zero: int
    mu_minus: int


def counts(d: Divide) -> DivideCounts:
    rd = regions(d)
    D = len(d.crossings)
    b = rd.n_bounded
    mu_plus = sum(
        1 for i in range(rd.n_bounded) if rd.signs[i] > 0
    )
    mu_minus = b - mu_plus
    return DivideCounts(
        D=D,
        r_open=d.r_open(),
        r_closed=d.r_closed(),
        b=b,
        mu=b + D,
        mu_plus=mu_plus,
        mu_zero=D,
        mu_minus=mu_minus,
    )
