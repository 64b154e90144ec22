import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from dividelab import (  # noqa: E402
    all_divides,
    all_realizations,
    cable,
    chebyshev_divide,
    connected_sum,
    double_cusp,
    puiseux_divide,
)

from oracles import coprime_pairs  # noqa: E402


@pytest.fixture(scope="session")
def torus_pairs():
    return coprime_pairs(35)


@pytest.fixture(scope="session")
def corpus(torus_pairs):
    """Bulk instance corpus: every enumerated divide with up to four double
    points, the Chebyshev divides with pq <= 35, cables, and connected sums.
    """
    divides = []
    for g in range(5):
        divides += all_realizations(g)
    for p, q in torus_pairs:
        divides.append(chebyshev_divide(p, q))
    p23 = chebyshev_divide(2, 3)
    divides += [
        puiseux_divide([(2, 3), (2, 7)]),
        puiseux_divide([(2, 3), (3, 11)]),
        cable(2, 9, p23),
        cable(3, 4, p23),
        cable(2, 5, chebyshev_divide(2, 5)),
        double_cusp(),
    ]
    for d in all_divides(4):
        divides.append(connected_sum(d, p23, 0, 0))
    for d1 in all_divides(3):
        for d2 in all_realizations(2):
            divides.append(connected_sum(d1, d2, 0, 0))
    for p, q in torus_pairs[:12]:
        divides.append(connected_sum(chebyshev_divide(p, q), p23, 0, 0))
    return divides
