"""Combinatorics of plane-curve divides and their homological monodromy."""

from .divide import (
    Branch,
    Divide,
    build_divide,
    divide_from_chords,
    from_json,
    from_json_obj,
)
from .canonical import canonical_label, crossing_order, dart_rank
from .regions import DivideCounts, Region, RegionData, counts, regions
from .generators import (
    CablingPlan,
    PuiseuxPairs,
    cable,
    chebyshev_divide,
    parse_pairs,
    puiseux_divide,
    puiseux_to_plan,
    reduction_count,
)
from .moves import apply_move_III, connected_sum
from .homology import (
    IntPoly,
    SeifertData,
    VanishingBasis,
    alexander,
    conjugation,
    cyclotomic,
    full_word,
    intersection_form,
    monodromy,
    order_profile,
    seifert,
    transvection_product,
    vanishing_basis,
)
from .ribbon import RibbonSurface, ribbon_fiber
from .census import (
    GaussCode,
    all_divides,
    all_realizations,
    candidate_codes,
    count_divides,
    realizations,
)
from .tracer import (
    ParamCurve,
    TracedCurve,
    chebyshev_eval,
    combinatorialize,
    pair_intersections,
    parse_curve,
    trace,
)
from .report import analyze, format_report, identity_suite
from .layout import RenderLayout, layout, render_svg
from .fixtures import double_cusp
from . import errors

__all__ = [
    "Branch",
    "Divide",
    "build_divide",
    "divide_from_chords",
    "from_json",
    "from_json_obj",
    "canonical_label",
    "crossing_order",
    "dart_rank",
    "DivideCounts",
    "Region",
    "RegionData",
    "counts",
    "regions",
    "CablingPlan",
    "PuiseuxPairs",
    "cable",
    "chebyshev_divide",
    "parse_pairs",
    "puiseux_divide",
    "puiseux_to_plan",
    "reduction_count",
    "apply_move_III",
    "connected_sum",
    "IntPoly",
    "SeifertData",
    "VanishingBasis",
    "alexander",
    "conjugation",
    "cyclotomic",
    "full_word",
    "intersection_form",
    "monodromy",
    "order_profile",
    "seifert",
    "transvection_product",
    "vanishing_basis",
    "RibbonSurface",
    "ribbon_fiber",
    "GaussCode",
    "all_divides",
    "all_realizations",
    "candidate_codes",
    "count_divides",
    "realizations",
    "ParamCurve",
    "TracedCurve",
    "chebyshev_eval",
    "combinatorialize",
    "pair_intersections",
    "parse_curve",
    "trace",
    "analyze",
    "format_report",
    "identity_suite",
    "RenderLayout",
    "layout",
    "render_svg",
    "double_cusp",
    "errors",
]

__version__ = "0.1.0"
