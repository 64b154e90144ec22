"""Print the census of one-interval divides with invariant fingerprints.

For each g up to the given bound (default 4), lists d(g) and one line per
counted class: canonical label, signature counts, monodromy order and
Alexander polynomial.

Run from the repository root:  python3 scripts/census_table.py [G_MAX]
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from dividelab import (  # noqa: E402
    alexander,
    all_divides,
    canonical_label,
    counts,
    monodromy,
    order_profile,
    seifert,
    vanishing_basis,
)


def main():
    g_max = int(sys.argv[1]) if len(sys.argv) > 1 else 4
    for g in range(g_max + 1):
        divs = all_divides(g)
        print(f"g={g}: d(g) = {len(divs)}")
        for d in divs:
            c = counts(d)
            sd = seifert(d, vanishing_basis(d))
            T = monodromy(sd)
            prof = order_profile(T, k_max=10 ** 6)
            order = prof.order if prof.finite else f"inf ({prof.certificate})"
            print(
                f"  {canonical_label(d):40s} "
                f"mu={c.mu:2d} (+{c.mu_plus},0{c.mu_zero},-{c.mu_minus}) "
                f"order={order} alexander={alexander(sd)}"
            )
        print()


if __name__ == "__main__":
    main()
