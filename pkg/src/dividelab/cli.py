"""Command-line interface.

Subcommands emit divide JSON on stdout so they compose through pipes:

    dividelab gen puiseux "(2,3),(2,7)" | dividelab analyze -

Exit codes: 0 on success, 1 on validation failure (any DivideError),
2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import pathlib
import sys
from fractions import Fraction

from .canonical import canonical_label
from .census import all_divides, count_divides
from .divide import Divide, from_json
from .errors import DivideError
from .generators import cable, chebyshev_divide, parse_pairs, puiseux_divide
from .layout import render_svg
from .report import analyze, format_report, identity_suite, to_json
from .tracer import combinatorialize, parse_curve, trace


def _read_divide(path: str) -> Divide:
    if path == "-":
        text = sys.stdin.read()
    else:
        text = pathlib.Path(path).read_text()
    try:
        return from_json(text)
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise DivideError(f"malformed divide JSON: {exc}") from exc


def _emit(text: str, out) -> None:
    if out:
        pathlib.Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _cmd_gen(args) -> int:
    if args.kind == "torus":
        d = chebyshev_divide(args.p, args.q)
    else:
        d = puiseux_divide(parse_pairs(args.pairs))
    sys.stdout.write(d.to_json() + "\n")
    return 0


def _cmd_cable(args) -> int:
    base = _read_divide(args.input)
    d = cable(args.p, args.q, base)
    sys.stdout.write(d.to_json() + "\n")
    return 0


def _cmd_analyze(args) -> int:
    d = _read_divide(args.file)
    rep = analyze(d)
    if args.json:
        sys.stdout.write(to_json(rep) + "\n")
    else:
        sys.stdout.write(format_report(rep))
    return 0


def _cmd_trace(args) -> int:
    curve = parse_curve(args.curve, Fraction(args.scale))
    tc = trace(curve, samples=args.samples)
    d = combinatorialize(tc, curve)
    if args.csv:
        rows = "\n".join(
            f"{t!r},{x!r},{y!r}" for t, x, y in tc.samples
        )
        pathlib.Path(args.csv).write_text(rows + "\n")
    sys.stdout.write(d.to_json() + "\n")
    return 0


def _cmd_enumerate(args) -> int:
    divides = all_divides(args.g)
    if args.emit_dir:
        out = pathlib.Path(args.emit_dir)
        out.mkdir(parents=True, exist_ok=True)
        for i, d in enumerate(divides):
            (out / f"divide-g{args.g}-{i:03d}.json").write_text(
                d.to_json() + "\n"
            )
    sys.stdout.write(f"d({args.g}) = {count_divides(args.g)}\n")
    return 0


def _cmd_render(args) -> int:
    d = _read_divide(args.file)
    _emit(render_svg(d), args.output)
    return 0


def _cmd_verify(args) -> int:
    d = _read_divide(args.file)
    verdicts = identity_suite(d)
    ok = all(verdicts.values())
    for name, passed in verdicts.items():
        sys.stdout.write(f"{'PASS' if passed else 'FAIL'}  {name}\n")
    sys.stdout.write(f"label: {canonical_label(d)}\n")
    return 0 if ok else 1


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="dividelab",
        description="Divides of plane curve branches: generation, "
        "invariants, enumeration, rendering.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a divide")
    gsub = gen.add_subparsers(dest="kind", required=True)
    torus = gsub.add_parser("torus", help="Chebyshev divide of a (p,q) pair")
    torus.add_argument("p", type=int)
    torus.add_argument("q", type=int)
    puiseux = gsub.add_parser("puiseux", help="iterated cable from pairs")
    puiseux.add_argument("pairs", help='"(a1,b1),(a2,b2),..."')
    gen.set_defaults(func=_cmd_gen)

    cab = sub.add_parser("cable", help="run a (p,q) pattern along a divide")
    cab.add_argument("p", type=int)
    cab.add_argument("q", type=int)
    cab.add_argument("--input", required=True, help="divide JSON file or -")
    cab.set_defaults(func=_cmd_cable)

    ana = sub.add_parser("analyze", help="full invariant report")
    ana.add_argument("file", help="divide JSON file or -")
    ana.add_argument("--json", action="store_true")
    ana.set_defaults(func=_cmd_analyze)

    tra = sub.add_parser("trace", help="trace a parametrized curve")
    tra.add_argument("curve", help='"x=t^m; y=c1*t^k1+..."')
    tra.add_argument("--scale", required=True, help="deformation scale s")
    tra.add_argument("--samples", type=int, default=4096)
    tra.add_argument("--csv", help="also write sampled (t,x,y) rows here")
    tra.set_defaults(func=_cmd_trace)

    enu = sub.add_parser("enumerate", help="census of one-interval divides")
    enu.add_argument("--g", type=int, required=True)
    enu.add_argument("--emit-dir", help="write one JSON file per class")
    enu.set_defaults(func=_cmd_enumerate)

    ren = sub.add_parser("render", help="render a divide as SVG")
    ren.add_argument("file", help="divide JSON file or -")
    ren.add_argument("-o", "--output", help="output SVG path (default stdout)")
    ren.set_defaults(func=_cmd_render)

    ver = sub.add_parser("verify", help="run the identity suite")
    ver.add_argument("file", help="divide JSON file or -")
    ver.set_defaults(func=_cmd_verify)

    return top


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    try:
        return args.func(args)
    except DivideError as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1
    except (ValueError, ZeroDivisionError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


def console_entry() -> None:
    sys.exit(main(sys.argv[1:]))
