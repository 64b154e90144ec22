"""Planar layout and SVG rendering of divides.

The closed map is barycentrically subdivided (nodes for vertices, edge
midpoints and face centers), the outside face circuit is pinned on a circle,
and interior nodes are placed by Tutte's barycentric method (each node at
the average of its neighbors).  Divide edges are drawn as polylines through
their two interior nodes.  Correctness is checked geometrically: the
polylines may meet only at shared crossings or endpoints, verified by a
segment sweep; degenerate placements are retried with seeded jitter.
"""

from __future__ import annotations

import math
import os
import random
from dataclasses import dataclass, field

import numpy as np

from .divide import Divide
from .errors import LayoutDegenerate

FLATTEN_STEPS = 16
MERGE_TOL = 1e-7


@dataclass(frozen=True)
class RenderLayout:
    positions: dict = field(repr=False)   # ("c", i) / ("e", i) -> (x, y)
    edge_curves: tuple = field(repr=False)  # 4-point control chain per edge
    radius: float = 1.0


def _vertex_key(d: Divide, dart):
    if isinstance(dart, tuple) and dart[0] == "a":
        _a, i, side = dart
        return ("e", i if side == 0 else (i + 1) % len(d.endpoints))
    s = d.site[dart]
    return ("c", s[1]) if s[0] == "c" else ("e", s[1])


def _subdivision(d: Divide):
    """Refined graph: original vertices, two interior nodes per edge (one
    per dart), one node per interior face; faces are linked to all their
    flags so loops and bigons spread out."""
    succ, alpha, darts = d.closed_map()
    orbits, face_of, cap = d.faces()

    def dart_node(h):
        return ("d", repr(h))

    nodes = set()
    adj = {}

    def link(u, v):
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
        nodes.add(u)
        nodes.add(v)

    for h in darts:
        link(_vertex_key(d, h), dart_node(h))
        link(dart_node(h), dart_node(alpha[h]))
        # rigidify the vertex star: consecutive darts in the rotation
        link(dart_node(h), dart_node(succ[h]))
    for fi, orbit in enumerate(orbits):
        if fi == cap:
            continue
        fnode = ("f", fi)
        for h in orbit:
            link(fnode, dart_node(h))
            link(fnode, _vertex_key(d, h))

    ring = []
    for h in orbits[cap]:
        v = _vertex_key(d, h)
        if v not in ring:  # a vertex can recur on the outside circuit
            ring.append(v)
        ring.append(dart_node(h))
        ring.append(dart_node(alpha[h]))
    return nodes, adj, ring, dart_node


def _solve_positions(nodes, adj, ring, jitter_rng=None):
    pinned = {}
    L = len(ring)
    for i, node in enumerate(ring):
        ang = 2 * math.pi * i / L
        x, y = math.cos(ang), math.sin(ang)
        if jitter_rng is not None:
            x += jitter_rng.uniform(-0.02, 0.02)
            y += jitter_rng.uniform(-0.02, 0.02)
        pinned[node] = (x, y)

    interior = sorted(n for n in nodes if n not in pinned)
    idx = {n: i for i, n in enumerate(interior)}
    n = len(interior)
    if n:
        A = np.zeros((n, n))
        bx = np.zeros(n)
        by = np.zeros(n)
        for node in interior:
            i = idx[node]
            neigh = adj[node]
            A[i][i] = len(neigh)
            for m in neigh:
                if m in idx:
                    A[i][idx[m]] -= 1
                else:
                    px, py = pinned[m]
                    bx[i] += px
                    by[i] += py
        xs = np.linalg.solve(A, bx)
        ys = np.linalg.solve(A, by)
    positions = dict(pinned)
    for node in interior:
        positions[node] = (float(xs[idx[node]]), float(ys[idx[node]]))
    return positions


def _flatten(curve):
    """Control chain of an edge, drawn as its exact polyline."""
    return list(curve)


def _seg_hit(p1, p2, p3, p4):
    x1, y1 = p1
    x2, y2 = p2
    x3, y3 = p3
    x4, y4 = p4
    dx1, dy1 = x2 - x1, y2 - y1
    dx2, dy2 = x4 - x3, y4 - y3
    den = dx1 * dy2 - dy1 * dx2
    if den == 0:
        return None
    ua = ((x3 - x1) * dy2 - (y3 - y1) * dx2) / den
    ub = ((x3 - x1) * dy1 - (y3 - y1) * dx1) / den
    if 0.0 <= ua <= 1.0 and 0.0 <= ub <= 1.0:
        return (x1 + ua * dx1, y1 + ua * dy1)
    return None


def _verify(d: Divide, positions, curves):
    """Flattened edge curves may meet only at shared node positions."""
    allowed = [positions[("c", i)] for i in range(len(d.crossings))]
    allowed += [positions[("e", i)] for i in range(len(d.endpoints))]
    polys = [_flatten(c) for c in curves]
    for a in range(len(polys)):
        for b in range(a, len(polys)):
            pa, pb = polys[a], polys[b]
            for i in range(len(pa) - 1):
                j0 = i + 2 if a == b else 0
                for j in range(j0, len(pb) - 1):
                    hit = _seg_hit(pa[i], pa[i + 1], pb[j], pb[j + 1])
                    if hit is None:
                        continue
                    if not any(
                        math.hypot(hit[0] - q[0], hit[1] - q[1]) < 1e-3
                        for q in allowed
                    ):
                        return False
    # distinct node positions
    keys = [k for k in positions if k[0] in ("c", "e")]
    for i in range(len(keys)):
        for j in range(i + 1, len(keys)):
            p, q = positions[keys[i]], positions[keys[j]]
            if math.hypot(p[0] - q[0], p[1] - q[1]) < MERGE_TOL:
                return False
    return True


def layout(d: Divide) -> RenderLayout:
    if d.crossings == () and d.endpoints == ():
        raise LayoutDegenerate("nothing to draw")
    nodes, adj, ring, dart_node = _subdivision(d)

    seed = int(os.environ.get("DIVIDELAB_SEED", "0"))
    attempts = 6
    for attempt in range(attempts):
        rng = random.Random(seed + attempt) if attempt else None
        try:
            positions = _solve_positions(nodes, adj, ring, jitter_rng=rng)
        except np.linalg.LinAlgError:
            continue
        curves = []
        ok = True
        for h, k in sorted(d.edges):
            va = positions[_vertex_key(d, h)]
            vb = positions[_vertex_key(d, k)]
            curves.append((va, positions[dart_node(h)], positions[dart_node(k)], vb))
        if not all(map(lambda c: all(math.isfinite(x) for p in c for x in p), curves)):
            ok = False
        if ok and _verify(d, positions, curves):
            visible = {
                k: v for k, v in positions.items() if k[0] in ("c", "e")
            }
            return RenderLayout(
                positions=visible, edge_curves=tuple(curves), radius=1.0
            )
    raise LayoutDegenerate(
        f"no valid placement after {attempts} jittered attempts"
    )


def render_svg(d: Divide, size: int = 480) -> str:
    lay = layout(d)
    s = size / 2.4  # map radius-1.1 picture into the canvas

    def tr(p):
        return (size / 2 + s * p[0], size / 2 - s * p[1])

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<circle cx="{size/2}" cy="{size/2}" r="{s*lay.radius:.2f}" '
        'fill="none" stroke="#999" stroke-width="1.5"/>',
    ]
    for chain in lay.edge_curves:
        pts = [tr(p) for p in chain]
        data = "M " + " L ".join(f"{x:.3f} {y:.3f}" for x, y in pts)
        parts.append(
            f'<path d="{data}" fill="none" stroke="#000" stroke-width="2" '
            'stroke-linejoin="round"/>'
        )
    for key, p in sorted(lay.positions.items()):
        x, y = tr(p)
        color = "#c00" if key[0] == "c" else "#06c"
        parts.append(
            f'<circle cx="{x:.3f}" cy="{y:.3f}" r="3.5" fill="{color}"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
