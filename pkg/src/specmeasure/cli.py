"""Command-line entry point: ``specmeasure {bound,oracle,gaps,compare,preset}``.

Exit status is 0 on success, 1 for unusable input (bad spec file, unknown
preset, bad arguments) and 2 for numerical failures.  A preset whose checks
fail also exits with 2.
"""
from __future__ import annotations

import argparse
import csv
import io
import math
import sys
from pathlib import Path

import numpy as np

from . import oracle as oracle_mod
from .bounds import BoundReport, ds_comparison_bound, theorem1_bound
from .linalg import ConvergenceError
from .operators import (
    JacobiSpec,
    Schrodinger2DSpec,
    jacobi_best_shift,
    jacobi_restricted_bound,
    jacobi_symbol,
    large_spectrum_potential,
    schrodinger2d_symbol,
    sharpness_spec,
)
from .oracle import band_csv, sample_bands, validate_report, validation_grid
from .specfile import OperatorSpec, SpecError, load_spec

EXIT_OK, EXIT_INPUT, EXIT_NUMERIC = 0, 1, 2


class InputError(Exception):
    pass


def fmt(x) -> str:
    if x is None:
        return "n/a"
    if isinstance(x, complex):
        return f"{x.real:.12g}{x.imag:+.12g}j"
    return f"{x:.12g}"


def _symbol_for(spec: OperatorSpec, grid: int = 0):
    """Symbol used for bounds; Jacobi specs are first rotated to their best shift."""
    if spec.type == "jacobi1d":
        shift, _ = jacobi_best_shift(spec.jacobi)
        return jacobi_symbol(spec.jacobi.rotated(shift), spec.restrict, grid)
    return spec.build_symbol(grid)


def _report_lines(spec: OperatorSpec, sym, report: BoundReport) -> list[str]:
    lines = [
        f"type = {spec.type}",
        f"matrix_dim = {sym.N}",
        f"k_dim = {sym.domain.dim}",
        f"n_terms = {len(report.terms)}",
        f"paper_total = {fmt(report.paper_total)}",
        f"sound_total = {fmt(report.sound_total)}",
        f"refined_total = {fmt(report.refined_total)}",
        f"trivial_total = {fmt(report.trivial_total)}",
        f"trivial_total.note = grid estimate of 2 max ||A(k)|| on L={report.trivial_grid} points per axis",
    ]
    for t in report.terms:
        p = f"term[{t.index}]"
        lines += [
            f"{p}.diameter = {fmt(t.diameter)}",
            f"{p}.radius = {fmt(t.radius)}",
            f"{p}.center = {fmt(complex(t.center))}",
            f"{p}.nuclear_norm = {fmt(t.nuclear_norm)}",
            f"{p}.paper_contribution = {fmt(t.paper_contribution)}",
            f"{p}.sound_contribution = {fmt(t.sound_contribution)}",
        ]
    for e in report.enclosures:
        lines.append(f"enclosure[{e.index}] = [{fmt(e.lower)}, {fmt(e.upper)}]")
    lines.append(f"n_gaps = {len(report.gaps)}")
    for i, g in enumerate(report.gaps, start=1):
        lines.append(f"gap[{i}] = ({fmt(g.lower)}, {fmt(g.upper)})")
    if spec.type == "jacobi1d":
        shift, value = jacobi_best_shift(spec.jacobi)
        lines += [f"jacobi.best_shift = {shift + 1}", f"jacobi.best_shift_bound = {fmt(value)}"]
        if spec.restrict is not None:
            a, b = spec.restrict
            lines.append(f"jacobi.restricted_bound = {fmt(jacobi_restricted_bound(spec.jacobi, a, b))}")
    return lines


def report_csv(report: BoundReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["record", "index", "diameter", "radius", "nuclear_norm",
                "paper_contribution", "sound_contribution", "lower", "upper"])
    for t in report.terms:
        w.writerow(["term", t.index, repr(t.diameter), repr(t.radius), repr(t.nuclear_norm),
                    repr(t.paper_contribution), repr(t.sound_contribution), "", ""])
    for e in report.enclosures:
        w.writerow(["enclosure", e.index, "", "", "", "", "", repr(e.lower), repr(e.upper)])
    for i, g in enumerate(report.gaps, start=1):
        w.writerow(["gap", i, "", "", "", "", "", repr(g.lower), repr(g.upper)])
    return buf.getvalue()


def _verdict_lines(verdict) -> list[str]:
    return [
        f"oracle_measure = {fmt(verdict.oracle_measure)}",
        f"tightness_ratio = {fmt(verdict.ratio)}",
        f"check.enclosures = {'PASS' if verdict.enclosures_ok else 'FAIL'}",
        f"check.measure_chain = {'PASS' if verdict.measure_ok else 'FAIL'}",
        f"check.gaps = {'PASS' if verdict.gaps_ok else 'FAIL'}",
    ]


def _write(path, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def cmd_bound(args) -> int:
    spec = load_spec(args.spec)
    sym = _symbol_for(spec, args.grid)
    report = theorem1_bound(sym)
    lines = _report_lines(spec, sym, report)
    if not args.no_oracle:
        verdict = validate_report(sym, report, args.grid or None, tol=args.tol)
        lines += _verdict_lines(verdict)
    print("\n".join(lines))
    if args.csv:
        _write(args.csv, report_csv(report))
    return EXIT_OK


def cmd_oracle(args) -> int:
    spec = load_spec(args.spec)
    sym = spec.build_symbol(args.grid)
    bands = sample_bands(sym)
    lines = [f"grid = {bands.grid}", f"n_bands = {bands.n_bands}"]
    for n, (lo, hi) in enumerate(bands.edges, start=1):
        lines.append(f"band[{n}] = [{fmt(lo)}, {fmt(hi)}]")
    lines.append(f"union_measure = {fmt(bands.measure)}")
    lines.append(f"n_observed_gaps = {len(bands.gaps)}")
    for i, (lo, hi) in enumerate(bands.gaps, start=1):
        lines.append(f"observed_gap[{i}] = ({fmt(lo)}, {fmt(hi)})")
    print("\n".join(lines))
    if args.csv:
        _write(args.csv, band_csv(bands))
    return EXIT_OK


def cmd_gaps(args) -> int:
    spec = load_spec(args.spec)
    sym = _symbol_for(spec, args.grid)
    report = theorem1_bound(sym, trivial=False)
    lines = [f"n_certified_gaps = {len(report.gaps)}"]
    for i, g in enumerate(report.gaps, start=1):
        lines.append(f"certified_gap[{i}] = ({fmt(g.lower)}, {fmt(g.upper)})")
    if not args.no_oracle:
        bands = sample_bands(sym, args.grid or validation_grid(sym))
        verdict = validate_report(sym, report, bands=bands, tol=args.tol)
        lines.append(f"n_observed_gaps = {len(bands.gaps)}")
        for i, (lo, hi) in enumerate(bands.gaps, start=1):
            lines.append(f"observed_gap[{i}] = ({fmt(lo)}, {fmt(hi)})")
        lines.append(f"check.gaps = {'PASS' if verdict.gaps_ok else 'FAIL'}")
    print("\n".join(lines))
    return EXIT_OK


def comparison_rows(spec: OperatorSpec, grid: int = 0) -> list[tuple[str, float, bool, bool]]:
    """Rows (name, value, certified, holds) where ``holds`` means value >= oracle."""
    sym = _symbol_for(spec, grid)
    report = theorem1_bound(sym)
    verdict = validate_report(sym, report, grid or None)
    oracle = verdict.oracle_measure
    tol = oracle_mod.MEASURE_TOL
    rows = [("oracle", oracle, False, True)]
    for name, value, certified in (
        ("refined", report.refined_total, True),
        ("sound", report.sound_total, True),
        ("paper", report.paper_total, True),
        ("trivial", report.trivial_total, False),
    ):
        rows.append((name, value, certified, value + tol >= oracle))
    J = spec.jacobi
    if spec.type == "jacobi1d" and J.block_dim == 1 and spec.restrict is None:
        ds = ds_comparison_bound([x[0, 0] for x in J.a])
        rows.append(("ds", ds, True, ds + tol >= oracle))
    return rows


def cmd_compare(args) -> int:
    spec = load_spec(args.spec)
    rows = comparison_rows(spec, args.grid)
    print(f"{'bound':<10} {'value':>20} {'certified':>10} {'>= oracle':>10}")
    for name, value, certified, holds in rows:
        print(f"{name:<10} {fmt(value):>20} {'yes' if certified else 'no':>10} {'yes' if holds else 'NO':>10}")
    return EXIT_OK


# presets -------------------------------------------------------------------

def _preset_sharpness(params) -> tuple[list[str], bool]:
    m = int(params.get("m", 2))
    L = int(params.get("grid", 512))
    sym = jacobi_symbol(sharpness_spec(m), grid=L)
    report = theorem1_bound(sym)
    verdict = validate_report(sym, report, L)
    target = 4.0 * m
    ok = (abs(report.sound_total - target) <= 1e-9 and abs(verdict.oracle_measure - target) <= 1e-2
          and verdict.passed)
    return [f"m = {m}", f"target = {fmt(target)}", f"sound_total = {fmt(report.sound_total)}",
            *_verdict_lines(verdict)], ok


def _preset_theorem3_equality(params) -> tuple[list[str], bool]:
    q = float(params.get("q", 7.0))
    L = int(params.get("grid", 128))
    sym = schrodinger2d_symbol(Schrodinger2DSpec([[q]]), grid=L)
    report = theorem1_bound(sym)
    verdict = validate_report(sym, report, L)
    ok = (abs(report.paper_total - 8.0) <= 1e-9 and abs(report.sound_total - 8.0) <= 1e-9
          and abs(verdict.oracle_measure - 8.0) <= 1e-2 and verdict.passed)
    return [f"q = {fmt(q)}", f"paper_total = {fmt(report.paper_total)}",
            f"sound_total = {fmt(report.sound_total)}", *_verdict_lines(verdict)], ok


def _preset_large_spectrum(params) -> tuple[list[str], bool]:
    N = int(params.get("N", 2))
    M = int(params.get("M", 3))
    eps = float(params.get("eps", 0.01))
    L = int(params.get("grid", 128))
    sym = schrodinger2d_symbol(large_spectrum_potential(N, M, eps), grid=L)
    report = theorem1_bound(sym, trivial=False)
    verdict = validate_report(sym, report, L)
    target = 4.0 * max(N, M)
    ok = target - 0.5 <= verdict.oracle_measure <= target + 0.1 and verdict.passed
    return [f"N = {N}", f"M = {M}", f"eps = {fmt(eps)}", f"target = {fmt(target)}",
            f"paper_total = {fmt(report.paper_total)}", *_verdict_lines(verdict)], ok


def _preset_ds_comparison(params) -> tuple[list[str], bool]:
    T = float(params.get("T", 100.0))
    L = int(params.get("grid", 512))
    spec = JacobiSpec((np.array([[T]]), np.array([[1.0]])), (np.zeros((1, 1)), np.zeros((1, 1))))
    shift, _ = jacobi_best_shift(spec)
    sym = jacobi_symbol(spec.rotated(shift), grid=L)
    report = theorem1_bound(sym)
    verdict = validate_report(sym, report, L)
    ds = ds_comparison_bound([T, 1.0])
    ok = (abs(report.sound_total - 4.0) <= 1e-9 and abs(ds - 4.0 * math.sqrt(T)) <= 1e-9 * ds
          and verdict.oracle_measure <= 4.0 + oracle_mod.MEASURE_TOL and verdict.passed)
    return [f"T = {fmt(T)}", f"sound_total = {fmt(report.sound_total)}", f"ds_bound = {fmt(ds)}",
            *_verdict_lines(verdict)], ok


PRESETS = {
    "sharpness-4m": _preset_sharpness,
    "theorem3-equality": _preset_theorem3_equality,
    "large-spectrum": _preset_large_spectrum,
    "ds-comparison": _preset_ds_comparison,
}


def _preset_params(items) -> dict[str, str]:
    params = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise InputError(f"preset parameter {item!r} is not of the form key=value")
        params[key] = value
    return params


def run_preset(name: str, params: dict) -> tuple[list[str], bool]:
    if name not in PRESETS:
        raise InputError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}")
    try:
        return PRESETS[name](params)
    except ValueError as exc:
        raise InputError(f"preset {name}: {exc}") from None


def cmd_preset(args) -> int:
    lines, ok = run_preset(args.name, _preset_params(args.params))
    print("\n".join([f"preset = {args.name}", *lines, f"result = {'PASS' if ok else 'FAIL'}"]))
    return EXIT_OK if ok else EXIT_NUMERIC


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="specmeasure",
                                     description="Certified bounds on the measure of band spectra.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, oracle_flag=True):
        p.add_argument("spec", help="operator spec file (JSON)")
        p.add_argument("--grid", type=int, default=0, help="k-grid points per axis")
        p.add_argument("--tol", type=float, default=oracle_mod.ENCLOSURE_TOL,
                       help="tolerance for enclosure checks")
        if oracle_flag:
            p.add_argument("--no-oracle", action="store_true", help="skip the sampling oracle")

    p = sub.add_parser("bound", help="bound report")
    common(p)
    p.add_argument("--csv", help="write per-term/enclosure/gap CSV here")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("oracle", help="sampled band structure")
    common(p, oracle_flag=False)
    p.add_argument("--csv", help="write per-k eigenvalue CSV here")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gaps", help="certified spectral gaps")
    common(p)
    p.set_defaults(func=cmd_gaps)

    p = sub.add_parser("compare", help="compare bounds against the oracle")
    common(p, oracle_flag=False)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("preset", help="run a named experiment")
    p.add_argument("name", help=", ".join(PRESETS))
    p.add_argument("params", nargs="*", help="key=value overrides, e.g. m=3")
    p.set_defaults(func=cmd_preset)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    if getattr(args, "grid", 0) and args.grid < 2:
        print("error: --grid must be at least 2", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except (SpecError, InputError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ConvergenceError, np.linalg.LinAlgError, ArithmeticError, ValueError) as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
