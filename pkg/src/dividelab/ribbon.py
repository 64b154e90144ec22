"""Ribbon-surface model of the fiber.

Every crossing becomes a roundabout: four trivalent T-junctions joined by
four arc strips, with the four road strips leaving radially; every divide
edge is a road strip between junctions (or endpoint stubs).  Every strip
carries a half twist.  The surface is orientable because every cycle in the
road network crosses an even number of half-twisted strips; a vertex sign
assignment removes all twists, after which boundary circuits are the faces
of an ordinary ribbon graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .divide import Divide
from .errors import Disconnected, DivideError
from .regions import counts


@dataclass(frozen=True)
class RibbonSurface:
    vertices: tuple  # ("t", crossing, slot) junctions and ("e", i) stubs
    edges: tuple  # (kind, endpoints 2-tuple of vertex ids, half_twist flag)
    boundary_circuits: tuple = field(repr=False)
    euler_char: int = 0
    genus: int = 0
    boundary_count: int = 0


def ribbon_fiber(d: Divide) -> RibbonSurface:
    if not d.is_connected():
        raise Disconnected("fiber model requires a connected divide")

    vertices = [("t", ci, slot) for ci in range(len(d.crossings)) for slot in range(4)]
    vertices += [("e", i) for i in range(len(d.endpoints))]
    vid = {v: i for i, v in enumerate(vertices)}

    def junction_of(h):
        s = d.site[h]
        if s[0] == "c":
            return vid[("t", s[1], s[2])]
        return vid[("e", s[1])]

    edges = []  # (kind, (u, v), twisted)
    for ci in range(len(d.crossings)):
        for slot in range(4):
            u = vid[("t", ci, slot)]
            v = vid[("t", ci, (slot + 1) % 4)]
            edges.append(("arc", (u, v), True))
    for h, k in d.edges:
        edges.append(("road", (junction_of(h), junction_of(k)), True))

    # rotation at each junction, counterclockwise: road out, arc toward the
    # next slot, arc toward the previous slot
    rotation = [[] for _ in vertices]  # lists of darts (edge index, end)
    road_dart = {}
    arc_fwd = {}
    arc_bwd = {}
    for ei, (kind, (u, v), _t) in enumerate(edges):
        if kind == "arc":
            arc_fwd[u] = (ei, 0)
            arc_bwd[v] = (ei, 1)
    for ei, (kind, (u, v), _t) in enumerate(edges):
        if kind == "road":
            road_dart.setdefault(u, []).append((ei, 0))
            road_dart.setdefault(v, []).append((ei, 1))
    for i, v in enumerate(vertices):
        if v[0] == "t":
            rotation[i] = [road_dart[i][0], arc_fwd[i], arc_bwd[i]]
        else:
            rotation[i] = [road_dart[i][0]]

    # orientation signs: every strip is half twisted, so adjacent junction
    # disks must carry opposite signs
    n_v = len(vertices)
    adj = [[] for _ in range(n_v)]
    for ei, (_k, (u, v), _t) in enumerate(edges):
        adj[u].append(v)
        adj[v].append(u)
    sign = [0] * n_v
    sign[0] = 1
    stack = [0]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if sign[v] == 0:
                sign[v] = -sign[u]
                stack.append(v)
            elif sign[v] != -sign[u]:
                raise DivideError("ribbon surface is not orientable")

    # de-twist: flipping a junction reverses its rotation and toggles the
    # twist of its strips; with alternating signs all strips untwist
    succ = {}
    for i in range(n_v):
        rot = rotation[i] if sign[i] > 0 else list(reversed(rotation[i]))
        for j, dart in enumerate(rot):
            succ[dart] = rot[(j + 1) % len(rot)]

    def other(dart):
        ei, end = dart
        return (ei, 1 - end)

    # boundary circuits = faces of the untwisted ribbon graph
    seen = set()
    circuits = []
    for start in succ:
        if start in seen:
            continue
        circuit = []
        h = start
        while h not in seen:
            seen.add(h)
            circuit.append(h)
            h = succ[other(h)]
        circuits.append(tuple(circuit))

    euler = n_v - len(edges)
    boundary = len(circuits)
    genus2 = 2 - euler - boundary
    if genus2 % 2:
        raise DivideError("inconsistent surface data (odd 2g)")

    cnt = counts(d)
    assert euler == 1 - cnt.mu

    return RibbonSurface(
        vertices=tuple(vertices),
        edges=tuple(edges),
        boundary_circuits=tuple(circuits),
        euler_char=euler,
        genus=genus2 // 2,
        boundary_count=boundary,
    )
