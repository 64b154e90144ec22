import json

from dividelab import (
    analyze,
    chebyshev_divide,
    double_cusp,
    format_report,
    identity_suite,
    puiseux_divide,
)
from dividelab.report import to_json


def test_identity_suite_passes_on_fixtures():
    for d in (
        chebyshev_divide(2, 3),
        chebyshev_divide(3, 4),
        puiseux_divide([(2, 3), (2, 7)]),
        double_cusp(),
    ):
        verdicts = identity_suite(d)
        assert verdicts and all(verdicts.values()), verdicts


def test_analyze_counts():
    rep = analyze(puiseux_divide([(2, 3), (2, 7)]))
    assert rep["counts"]["double_points"] == 8
    assert rep["counts"]["mu"] == 16
    assert rep["monodromy_order"]["finite"]
    assert rep["ribbon"]["genus"] == 8
    assert sum(rep["blocks"]) == 16


def test_analyze_json_roundtrip():
    rep = analyze(chebyshev_divide(3, 4))
    text = to_json(rep)
    back = json.loads(text)
    assert back["counts"] == rep["counts"]
    assert back["matrices"]["T"] == rep["matrices"]["T"]
    assert back["alexander"]["coeffs_ascending"] == list(
        rep["alexander"]["coeffs_ascending"]
    )


def test_format_report_layout():
    rep = analyze(chebyshev_divide(2, 5))
    text = format_report(rep)
    assert "mu=4" in text
    assert "S =" in text and "T =" in text and "C =" in text
    assert "char poly (ascending):" in text
    # block separator between basis blocks
    assert "|" in text
    assert text.count("PASS") == len(rep["identities"])


def test_report_polynomial_ascending():
    rep = analyze(chebyshev_divide(2, 3))
    assert rep["alexander"]["coeffs_ascending"] == [1, -1, 1]


def test_infinite_order_reported():
    rep = analyze(double_cusp())
    mo = rep["monodromy_order"]
    assert not mo["finite"]
    assert mo["unipotent_exponent"] == 10
    assert "infinite" in format_report(rep)
