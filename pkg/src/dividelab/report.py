"""Analysis reports: counts, matrices, polynomial, ribbon data, identities.

The plain-text format prints matrices row-major in the canonical basis
order with block separators and the characteristic polynomial ascending,
so reports diff cleanly across runs.
"""

from __future__ import annotations

import json

from . import intmat
from .canonical import canonical_label
from .divide import Divide
from .homology import (
    alexander,
    conjugation,
    full_word,
    monodromy,
    order_profile,
    seifert,
    transvection_product,
    vanishing_basis,
)
from .regions import counts
from .ribbon import ribbon_fiber


def identity_suite(d: Divide) -> dict:
    """Exact pass/fail verdicts for the matrix and count identities."""
    cnt = counts(d)
    basis = vanishing_basis(d)
    sd = seifert(d, basis)
    T = monodromy(sd)
    C = conjugation(sd)
    mu = sd.mu
    ident = intmat.identity(mu)

    ab = intmat.matmul(sd.A, sd.B)
    out = {}
    out["det_S_unimodular"] = intmat.det_unimodular_check(sd.S)
    out["G_half_AB"] = all(
        ab[i][j] == 2 * sd.G[i][j]
        for i in range(len(sd.A))
        for j in range(len(sd.B[0]) if sd.B else 0)
    ) if sd.A and sd.B else True
    out["C_involution"] = intmat.mat_eq(intmat.matmul(C, C), ident)
    out["C_reverses_T"] = intmat.mat_eq(
        intmat.matmul(intmat.matmul(C, T), C), _inverse_of(T)
    )
    out["trace_C_signature"] = (
        intmat.trace(C) == cnt.mu_plus - cnt.mu_zero + cnt.mu_minus
    )
    out["mu_from_trace"] = cnt.mu == 2 * cnt.mu_zero + intmat.trace(C)
    out["twist_product_is_T"] = intmat.mat_eq(
        transvection_product(basis, sd, full_word(basis)), T
    )
    out["alexander_symmetric"] = all(
        c == 0 for c in alexander(sd).reciprocal_defect()
    )
    rib = ribbon_fiber(d)
    out["ribbon_euler"] = rib.euler_char == 1 - cnt.mu
    out["ribbon_boundary"] = rib.boundary_count == cnt.r_open + 2 * cnt.r_closed
    return out


def _inverse_of(T):
    """Exact inverse of a unimodular integer matrix via Cayley-Hamilton."""
    n = len(T)
    chi = intmat.charpoly(T)  # ascending, monic, chi[0] = (-1)^n det
    c0 = chi[0]
    # Cayley-Hamilton: sum chi[k] T^k = 0 => T^-1 = -(1/c0) * sum_{k>=1} chi[k] T^{k-1}
    acc = intmat.zeros(n, n)
    power = intmat.identity(n)
    for k in range(1, n + 1):
        acc = intmat.add(acc, intmat.scale(power, chi[k]))
        if k < n:
            power = intmat.matmul(power, T)
    inv = intmat.scale(acc, -c0)  # c0 = ±1; -(1/c0) = -c0
    return inv


def analyze(d: Divide) -> dict:
    """JSON-ready report for one divide."""
    cnt = counts(d)
    basis = vanishing_basis(d)
    sd = seifert(d, basis)
    T = monodromy(sd)
    C = conjugation(sd)
    chi = alexander(sd)
    rib = ribbon_fiber(d)
    prof = order_profile(T, k_max=10 ** 6)
    return {
        "label": canonical_label(d),
        "counts": {
            "double_points": cnt.D,
            "interval_branches": cnt.r_open,
            "circle_branches": cnt.r_closed,
            "bounded_regions": cnt.b,
            "mu": cnt.mu,
            "mu_plus": cnt.mu_plus,
            "mu_zero": cnt.mu_zero,
            "mu_minus": cnt.mu_minus,
        },
        "blocks": [sd.mu_plus, sd.mu_zero, sd.mu_minus],
        "matrices": {
            "A": sd.A,
            "B": sd.B,
            "G": sd.G,
            "S": sd.S,
            "T": T,
            "C": C,
        },
        "alexander": {"coeffs_ascending": list(chi.coeffs), "text": str(chi)},
        "monodromy_order": {
            "finite": prof.finite,
            "order": prof.order,
            "certificate": prof.certificate,
            "spectral_radius_one": prof.spectral_radius_one,
            "unipotent_exponent": prof.unipotent_exponent,
        },
        "ribbon": {
            "euler_char": rib.euler_char,
            "genus": rib.genus,
            "boundary_components": rib.boundary_count,
        },
        "identities": identity_suite(d),
    }


def _fmt_matrix(name, M, blocks=None):
    lines = [f"{name} ="]
    if not M:
        lines.append("  (empty)")
        return lines
    width = max((len(str(x)) for row in M for x in row), default=1)
    cuts = set()
    if blocks:
        acc = 0
        for b in blocks[:-1]:
            acc += b
            cuts.add(acc)
    for i, row in enumerate(M):
        if i in cuts:
            lines.append("  " + "-" * ((width + 1) * len(row) + 2 * len(cuts)))
        cells = []
        for j, x in enumerate(row):
            if j in cuts:
                cells.append("|")
            cells.append(str(x).rjust(width))
        lines.append("  " + " ".join(cells))
    return lines


def format_report(rep: dict) -> str:
    c = rep["counts"]
    lines = []
    lines.append(f"divide {rep['label']}")
    lines.append(
        "counts: D={double_points} r_open={interval_branches} "
        "r_closed={circle_branches} b={bounded_regions}".format(**c)
    )
    lines.append(
        "mu={mu} (mu+={mu_plus}, mu0={mu_zero}, mu-={mu_minus})".format(**c)
    )
    blocks = rep["blocks"]
    lines.append(f"basis blocks (maxima, saddles, minima): {tuple(blocks)}")
    for name in ("A", "B", "G"):
        lines += _fmt_matrix(name, rep["matrices"][name])
    for name in ("S", "T", "C"):
        lines += _fmt_matrix(name, rep["matrices"][name], blocks=blocks)
    ax = rep["alexander"]
    lines.append(f"char poly (ascending): {ax['coeffs_ascending']}")
    lines.append(f"char poly: {ax['text']}")
    mo = rep["monodromy_order"]
    if mo["finite"]:
        lines.append(f"monodromy order: {mo['order']}")
    else:
        lines.append(f"monodromy order: infinite ({mo['certificate']})")
        if mo["unipotent_exponent"]:
            lines.append(f"unipotent exponent: {mo['unipotent_exponent']}")
    rb = rep["ribbon"]
    lines.append(
        "fiber surface: euler={euler_char} genus={genus} "
        "boundary={boundary_components}".format(**rb)
    )
    lines.append("identities:")
    for k, ok in rep["identities"].items():
        lines.append(f"  {'PASS' if ok else 'FAIL'}  {k}")
    return "\n".join(lines) + "\n"


def to_json(rep: dict) -> str:
    return json.dumps(rep, indent=1, sort_keys=True)
