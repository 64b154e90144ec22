import json

import pytest

from dividelab import canonical_label, chebyshev_divide, from_json
from dividelab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_torus(capsys):
    code, out, _ = run(capsys, "gen", "torus", "2", "3")
    assert code == 0
    d = from_json(out)
    assert canonical_label(d) == canonical_label(chebyshev_divide(2, 3))


def test_gen_puiseux_analyze_pipeline(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "puiseux", "(2,3),(2,7)")
    assert code == 0
    f = tmp_path / "d.json"
    f.write_text(out)
    code, out, _ = run(capsys, "analyze", str(f))
    assert code == 0
    assert "mu=16" in out
    assert "D=8" in out


def test_cable(capsys, tmp_path):
    f = tmp_path / "base.json"
    f.write_text(chebyshev_divide(2, 3).to_json())
    code, out, _ = run(capsys, "cable", "2", "9", "--input", str(f))
    assert code == 0
    assert from_json(out).n_crossings == 8


def test_analyze_json_flag(capsys, tmp_path):
    f = tmp_path / "d.json"
    f.write_text(chebyshev_divide(3, 4).to_json())
    code, out, _ = run(capsys, "analyze", str(f), "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["counts"]["mu"] == 6


def test_trace(capsys, tmp_path):
    csv = tmp_path / "pts.csv"
    code, out, _ = run(
        capsys, "trace", "x=t^2; y=t^3", "--scale", "1/2", "--csv", str(csv)
    )
    assert code == 0
    d = from_json(out)
    assert canonical_label(d) == canonical_label(chebyshev_divide(2, 3))
    rows = csv.read_text().strip().splitlines()
    assert all(len(r.split(",")) == 3 for r in rows)


def test_enumerate(capsys, tmp_path):
    out_dir = tmp_path / "census"
    code, out, _ = run(
        capsys, "enumerate", "--g", "2", "--emit-dir", str(out_dir)
    )
    assert code == 0
    assert "d(2) = 2" in out
    files = sorted(out_dir.glob("*.json"))
    assert len(files) == 2
    labels = {canonical_label(from_json(f.read_text())) for f in files}
    assert len(labels) == 2


def test_render(capsys, tmp_path):
    f = tmp_path / "d.json"
    f.write_text(chebyshev_divide(2, 3).to_json())
    out_svg = tmp_path / "out.svg"
    code, _, _ = run(capsys, "render", str(f), "-o", str(out_svg))
    assert code == 0
    assert out_svg.read_text().startswith("<svg ")


def test_verify(capsys, tmp_path):
    f = tmp_path / "d.json"
    f.write_text(chebyshev_divide(2, 5).to_json())
    code, out, _ = run(capsys, "verify", str(f))
    assert code == 0
    assert "FAIL" not in out


def test_validation_failure_exit_1(capsys, tmp_path):
    f = tmp_path / "bad.json"
    f.write_text("not json at all")
    code, _, err = run(capsys, "analyze", str(f))
    assert code == 1
    assert "error" in err


def test_usage_error_exit_2(capsys):
    code, _, _ = run(capsys, "no-such-command")
    assert code == 2
    code, _, _ = run(capsys, "gen", "torus", "2")
    assert code == 2


def test_invalid_parameters_exit_1(capsys):
    code, _, err = run(capsys, "gen", "torus", "2", "4")
    assert code == 1
    assert "NotCoprime" in err
