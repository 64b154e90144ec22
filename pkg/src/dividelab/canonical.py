"""Canonical keys for divides.

Two divides get the same key exactly when they are related by a
homeomorphism of the disk (orientation preserving or reversing) together
with renumbering/reversal of branches.  The key is the minimum over all
rooted traversals of a BFS code of the rotation system; chirality -1
traverses rotations clockwise and the boundary in reverse, which folds
reflection into the equivalence.

The minimizing traversal also fixes a total order on crossings and
half-edges used for basis ordering and serialization.
"""

from __future__ import annotations

from collections import deque

from .divide import Divide


def _traverse(d: Divide, chirality, endpoint_index, endpoint_seeds=None, circle_seed=None):
    """BFS code for one rooted traversal.

    Either ``endpoint_seeds`` (endpoint darts in chosen boundary order) or
    ``circle_seed`` (crossing, slot) must be given.
    Returns (code, crossing_order, dart_rank).
    """
    partner = d.partner
    site = d.site
    crossings = d.crossings

    queue = deque()
    dart_rank = {}
    cross_index = {}
    cross_base = {}
    cross_order = []
    code = []

    def rank(h):
        if h not in dart_rank:
            dart_rank[h] = len(dart_rank)

    def open_crossing(ci, slot, queue_base):
        cross_index[ci] = len(cross_order)
        cross_base[ci] = slot
        cross_order.append(ci)
        cr = crossings[ci]
        rank(cr[slot])
        if queue_base:
            queue.append(cr[slot])
        for j in (1, 2, 3):
            h = cr[(slot + chirality * j) % 4]
            rank(h)
            queue.append(h)

    if circle_seed is not None:
        open_crossing(circle_seed[0], circle_seed[1], queue_base=True)
    else:
        for h in endpoint_seeds:
            rank(h)
            queue.append(h)

    while queue:
        h = queue.popleft()
        k = partner[h]
        s = site[k]
        if s[0] == "e":
            code.append(("e", endpoint_index[s[1]]))
        else:
            _, ci, slot = s
            if ci not in cross_index:
                open_crossing(ci, slot, queue_base=False)
                code.append(("c", cross_index[ci], 0))
            else:
                rel = ((slot - cross_base[ci]) * chirality) % 4
                code.append(("c", cross_index[ci], rel))
    return tuple(code), cross_order, dart_rank


def _canonical(d: Divide):
    if "canonical" in d._cache:
        return d._cache["canonical"]
    n_e = len(d.endpoints)
    cross_order = []
    dart_rank = {}
    ep_order = []
    code = ()
    if n_e:
        best = None
        for i0 in range(n_e):
            for c in (1, -1):
                order = [(i0 + c * k) % n_e for k in range(n_e)]
                endpoint_index = {e: k for k, e in enumerate(order)}
                seeds = [d.endpoints[e] for e in order]
                res = _traverse(d, c, endpoint_index, endpoint_seeds=seeds)
                if best is None or res[0] < best[0][0]:
                    best = (res, order)
        (code, cross_order, dart_rank), ep_order = best
        cross_order = list(cross_order)
        dart_rank = dict(dart_rank)

    # components made only of circles are unreachable from endpoints;
    # canonicalize each separately and append its key
    extra_keys = []
    leftover = [ci for ci in range(len(d.crossings)) if ci not in set(cross_order)]
    while leftover:
        bestc = None
        for ci in leftover:
            for slot in range(4):
                for c in (1, -1):
                    res = _traverse(d, c, {}, circle_seed=(ci, slot))
                    if bestc is None or res[0] < bestc[0]:
                        bestc = res
        ccode, corder, crank = bestc
        extra_keys.append(_code_str(len(corder), 0, ccode))
        cross_order.extend(corder)
        base = len(dart_rank)
        for h, r in crank.items():
            dart_rank[h] = base + r
        leftover = [ci for ci in leftover if ci not in set(corder)]

    key = _code_str(len(d.crossings), n_e, code)
    if extra_keys:
        key = key + "//" + "//".join(sorted(extra_keys))
    result = {
        "key": key,
        "cross_order": cross_order,
        "dart_rank": dart_rank,
        "endpoint_order": ep_order,
    }
    d._cache["canonical"] = result
    return result


def _code_str(n_c, n_e, code):
    toks = []
    for t in code:
        if t[0] == "e":
            toks.append(f"e{t[1]}")
        else:
            toks.append(f"c{t[1]}.{t[2]}")
    return f"D{n_c}E{n_e}|" + ";".join(toks)


def canonical_label(d: Divide) -> str:
    """Canonical string key; equal keys iff equivalent divides."""
    return _canonical(d)["key"]


def crossing_order(d: Divide):
    """Original crossing indices sorted into canonical order."""
    return list(_canonical(d)["cross_order"])


def dart_rank(d: Divide):
    """Canonical rank of every divide half-edge (dict)."""
    return dict(_canonical(d)["dart_rank"])
