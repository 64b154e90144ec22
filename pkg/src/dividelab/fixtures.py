"""Packaged divide fixtures."""

from __future__ import annotations

import json
from importlib import resources

from .divide import Divide, from_json_obj


def double_cusp() -> Divide:
    """Divide of the product of the two cusps x^3 = y^2 and y^3 = x^2.

    Two teardrop branches meeting in four points: D = 6, r_open = 2,
    mu = 11; the homological monodromy has infinite order with unipotent
    tenth power.
    """
    text = resources.files("dividelab").joinpath("data/double_cusp.json").read_text()
    return from_json_obj(json.loads(text))
