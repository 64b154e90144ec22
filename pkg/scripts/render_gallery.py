"""Render a gallery of example divides as SVG files.

Writes the Chebyshev pictures, the iterated cable of (2,3),(2,7), the
double-cusp fixture and every counted divide with three double points.

Run from the repository root:  python3 scripts/render_gallery.py [OUT_DIR]
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from dividelab import (  # noqa: E402
    all_divides,
    chebyshev_divide,
    double_cusp,
    puiseux_divide,
    render_svg,
)


def main():
    out_dir = sys.argv[1] if len(sys.argv) > 1 else "gallery"
    os.makedirs(out_dir, exist_ok=True)
    items = {
        "box-2-3": chebyshev_divide(2, 3),
        "box-3-4": chebyshev_divide(3, 4),
        "box-4-5": chebyshev_divide(4, 5),
        "box-5-7": chebyshev_divide(5, 7),
        "cable-23-27": puiseux_divide([(2, 3), (2, 7)]),
        "double-cusp": double_cusp(),
    }
    for i, d in enumerate(all_divides(3)):
        items[f"census-g3-{i}"] = d
    for name, d in items.items():
        path = os.path.join(out_dir, f"{name}.svg")
        with open(path, "w") as fh:
            fh.write(render_svg(d))
        print("wrote", path)


if __name__ == "__main__":
    main()
