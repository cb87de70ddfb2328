"""Command-line front end: spectra, wavefunction samples, figure data, verification.

All outputs are deterministic: identical invocations (including --seed)
produce byte-identical files.  Numbers are written with 17 significant
digits so parsed values round-trip exactly.
"""

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import model, verify
from .errors import ParameterDomainError, SingularPointError
from .model import Family, OscillatorParams, StateIndex
from .numerics import Sector, converge_spectrum

__all__ = ["main", "cmd_spectrum", "cmd_wavefunction", "cmd_potential",
           "cmd_figure1", "cmd_verify"]

FIG1_A_VALUES = (-0.6, 0.0, 2.0)
FIG1_GAMMAS = (0.5, 1.0, 1.5)


def _fmt(x):
    return format(float(x), ".17g")


def _params_from(args):
    # ParameterDomainError propagates to main(), which reports and exits 2.
    return OscillatorParams(m0=args.m0, omega=args.omega, hbar=args.hbar,
                            a=args.a, gamma=args.gamma)


def _family_from(args):
    if args.family == "canonical":
        return Family.CANONICAL
    if args.family == "parabose":
        return Family.PARABOSE
    return Family.PARABOSE if args.gamma > 0.5 else Family.CANONICAL


def _write(path, text):
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def cmd_spectrum(args):
    """Analytic levels n = 0..levels-1, optionally with oracle columns."""
    params = _params_from(args)
    family = _family_from(args)
    levels = args.levels
    energies = [model.energy(params, StateIndex(family, n)) for n in range(levels)]
    oracle = None
    if args.oracle:
        tol = args.tol if args.tol else (1e-5 if family is Family.CANONICAL else 1e-4)
        if family is Family.CANONICAL:
            est = converge_spectrum(params, Sector.FULL, levels, target_tol=tol)
            oracle = list(zip(est.values, est.error_estimates))
        else:
            k_even = (levels + 1) // 2
            k_odd = levels // 2
            even = converge_spectrum(params, Sector.PARABOSE_EVEN, max(k_even, 1), target_tol=tol)
            odd = (converge_spectrum(params, Sector.PARABOSE_ODD, k_odd, target_tol=tol)
                   if k_odd else None)
            oracle = []
            for n in range(levels):
                src = even if n % 2 == 0 else odd
                m = n // 2
                oracle.append((src.values[m], src.error_estimates[m]))
    if args.format == "json":
        rows = [{"n": n, "energy": energies[n]} for n in range(levels)]
        if oracle:
            for n, row in enumerate(rows):
                row["oracle"] = oracle[n][0]
                row["oracle_error_estimate"] = oracle[n][1]
                row["deviation"] = abs(oracle[n][0] - energies[n])
        _write(args.out, json.dumps({"levels": rows}, indent=2, sort_keys=True) + "\n")
    else:
        lines = ["n,energy [hbar*omega]" + (",oracle,oracle_error_estimate,deviation"
                                            if oracle else "")]
        for n in range(levels):
            row = f"{n},{_fmt(energies[n])}"
            if oracle:
                row += (f",{_fmt(oracle[n][0])},{_fmt(oracle[n][1])}"
                        f",{_fmt(abs(oracle[n][0] - energies[n]))}")
            lines.append(row)
        _write(args.out, "\n".join(lines) + "\n")
    return 0


def cmd_wavefunction(args):
    """Sampled psi_n on a uniform grid; singular origins are auto-offset."""
    params = _params_from(args)
    family = _family_from(args)
    state = StateIndex(family, args.n)
    xs = np.linspace(args.xmin, args.xmax, args.samples)
    step = (args.xmax - args.xmin) / max(args.samples - 1, 1)
    vals = []
    for x in xs:
        try:
            vals.append((float(x), model.wavefunction(params, state, float(x))))
        except SingularPointError:
            shifted = 1e-3 * step
            print(f"warning: state diverges at x = 0; sampling at {shifted:g} instead",
                  file=sys.stderr)
            vals.append((shifted, model.wavefunction(params, state, shifted)))
    if args.format == "json":
        doc = {"n": args.n, "family": family.value,
               "samples": [{"x": x, "psi": v} for x, v in vals]}
        _write(args.out, json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        lines = ["x [length],psi [1/sqrt(length)]"]
        lines += [f"{_fmt(x)},{_fmt(v)}" for x, v in vals]
        _write(args.out, "\n".join(lines) + "\n")
    return 0


def cmd_potential(args):
    """Sampled oscillator potential V(x)."""
    params = _params_from(args)
    xs = np.linspace(args.xmin, args.xmax, args.samples)
    if args.format == "json":
        doc = {"samples": [{"x": float(x), "V": model.potential(params, float(x))}
                           for x in xs]}
        _write(args.out, json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        lines = ["x [length],V [hbar*omega]"]
        lines += [f"{_fmt(x)},{_fmt(model.potential(params, float(x)))}" for x in xs]
        _write(args.out, "\n".join(lines) + "\n")
    return 0


def _turning_point_bisect(params, e_level, hi, tol=1e-10):
    """Positive x with V(x) = E by bisection (V strictly increasing)."""
    lo = 0.0
    while model.potential(params, hi) < e_level:
        hi *= 2.0
    while hi - lo > tol * max(1.0, hi):
        mid = 0.5 * (lo + hi)
        if model.potential(params, mid) < e_level:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _panel_data(params, family, ceiling_levels, samples,
                ceiling_above=None, x_range=None):
    """Potential samples and clipped level segments for one figure panel.

    Defaults: plot ceiling 8(a+1) hbar omega above the ground state, x-range
    the classically allowed width of the highest drawn level padded 15%.
    """
    e0 = model.energy(params, StateIndex(family, 0))
    if ceiling_above is None:
        ceiling_above = 8.0 * (params.a + 1.0) * params.hbar * params.omega
    ceiling = e0 + ceiling_above
    levels = []
    n = 0
    while True:
        e_n = model.energy(params, StateIndex(family, n))
        if e_n > ceiling or (ceiling_levels and n >= ceiling_levels):
            break
        levels.append((n, e_n))
        n += 1
    if x_range is None:
        x_top = _turning_point_bisect(params, levels[-1][1], 4.0 / params.lam0)
        x_range = 1.15 * x_top
    xs = np.linspace(-x_range, x_range, samples)
    pot = [(float(x), model.potential(params, float(x))) for x in xs]
    segs = []
    for n, e_n in levels:
        x_t = _turning_point_bisect(params, e_n, x_range)
        segs.append((n, e_n, -x_t, x_t))
    return pot, segs, x_range


def _panel_csv(pot, segs):
    lines = ["series,n,x,y"]
    for n, e_n, x_l, x_r in segs:
        lines.append(f"level,{n},{_fmt(x_l)},{_fmt(e_n)}")
        lines.append(f"level,{n},{_fmt(x_r)},{_fmt(e_n)}")
    for x, v in pot:
        lines.append(f"potential,,{_fmt(x)},{_fmt(v)}")
    return "\n".join(lines) + "\n"


def _panel_json(a, gamma, pot, segs):
    doc = {
        "a": a, "gamma": gamma,
        "levels": [{"n": n, "E": e, "x_left": xl, "x_right": xr}
                   for n, e, xl, xr in segs],
        "potential": [{"x": x, "V": v} for x, v in pot],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _panel_svg(a, gamma, pot, segs, x_range):
    width, height, margin = 480, 360, 40
    y_top = max(segs[-1][1] * 1.15, max(v for _, v in pot) * 0.4)
    xs_px = lambda x: margin + (x + x_range) / (2 * x_range) * (width - 2 * margin)
    ys_px = lambda y: height - margin - y / y_top * (height - 2 * margin)
    pts = " ".join(f"{xs_px(x):.2f},{ys_px(min(v, y_top)):.2f}"
                   for x, v in pot if v <= y_top * 1.02)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<polyline points="{pts}" fill="none" stroke="black" stroke-width="1.5"/>',
    ]
    for n, e_n, x_l, x_r in segs:
        parts.append(f'<line x1="{xs_px(x_l):.2f}" y1="{ys_px(e_n):.2f}" '
                     f'x2="{xs_px(x_r):.2f}" y2="{ys_px(e_n):.2f}" '
                     f'stroke="firebrick" stroke-width="1"/>')
    parts.append(f'<text x="{margin}" y="{margin - 14}" font-size="13" '
                 f'font-family="sans-serif">a = {a:g}, gamma = {gamma:g}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def cmd_figure1(args):
    """Nine deterministic panels: potential plus clipped energy levels."""
    out_dir = Path(args.out or "figure1")
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for gamma in FIG1_GAMMAS:
        for a in FIG1_A_VALUES:
            params = OscillatorParams(m0=args.m0, omega=args.omega, hbar=args.hbar,
                                      a=a, gamma=gamma)
            family = Family.PARABOSE if gamma > 0.5 else Family.CANONICAL
            pot, segs, x_range = _panel_data(params, family, args.levels, args.samples,
                                             ceiling_above=args.ceiling,
                                             x_range=args.xrange)
            stem = f"panel_a{a:g}_gamma{gamma:g}"
            if args.format == "json":
                path = out_dir / f"{stem}.json"
                path.write_text(_panel_json(a, gamma, pot, segs))
            else:
                path = out_dir / f"{stem}.csv"
                path.write_text(_panel_csv(pot, segs))
            written.append(path)
            if args.format == "svg":
                svg_path = out_dir / f"{stem}.svg"
                svg_path.write_text(_panel_svg(a, gamma, pot, segs, x_range))
                written.append(svg_path)
    for path in written:
        print(path)
    return 0


def cmd_verify(args):
    """Run verification suites; exit 0 iff every case passes."""
    params = _params_from(args)
    overrides = {}
    if args.tol:
        overrides = {name: args.tol for name in verify.SUITE_NAMES}
    reports = verify.run_suites(params, which=args.suite, seed=args.seed,
                                tol_overrides=overrides,
                                family=_family_from(args))
    text = verify.reports_to_json(reports, params=params, seed=args.seed)
    _write(args.out, text)
    for rep in reports:
        for case in rep.cases:
            status = "PASS" if case.passed else "FAIL"
            print(f"[{status}] {rep.suite}: {case.label} "
                  f"(measured {case.measured:.3e}, tol {case.tolerance:g})",
                  file=sys.stderr)
    return 0 if all(r.overall_pass for r in reports) else 1


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="pdmosc",
        description="Position-dependent-mass oscillator models: spectra, "
                    "wavefunctions, figure data and verification suites.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt=("csv", "json")):
        p.add_argument("--a", type=float, default=0.0, help="deformation, a > -1")
        p.add_argument("--gamma", type=float, default=0.5, help="parabose gamma >= 1/2")
        p.add_argument("--m0", type=float, default=1.0)
        p.add_argument("--omega", type=float, default=1.0)
        p.add_argument("--hbar", type=float, default=1.0)
        p.add_argument("--family", choices=("auto", "canonical", "parabose"),
                       default="auto")
        p.add_argument("--format", choices=fmt, default="csv")
        p.add_argument("--out", default=None, help="output file (default stdout)")
        p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
        p.add_argument("--tol", type=float, default=None)

    p = sub.add_parser("spectrum", help="analytic energy levels")
    common(p)
    p.add_argument("--levels", type=int, default=8)
    p.add_argument("--oracle", action="store_true",
                   help="add grid-oracle values and deviations")
    p.set_defaults(fn=cmd_spectrum)

    p = sub.add_parser("wavefunction", help="sampled psi_n")
    common(p)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--xmin", type=float, default=-5.0)
    p.add_argument("--xmax", type=float, default=5.0)
    p.add_argument("--samples", type=int, default=201)
    p.set_defaults(fn=cmd_wavefunction)

    p = sub.add_parser("potential", help="sampled V(x)")
    common(p)
    p.add_argument("--xmin", type=float, default=-5.0)
    p.add_argument("--xmax", type=float, default=5.0)
    p.add_argument("--samples", type=int, default=201)
    p.set_defaults(fn=cmd_potential)

    p = sub.add_parser("figure1", help="nine potential+levels panels")
    common(p, fmt=("csv", "json", "svg"))
    p.add_argument("--levels", type=int, default=0,
                   help="cap on levels per panel (0 = fill to the ceiling)")
    p.add_argument("--samples", type=int, default=301)
    p.add_argument("--ceiling", type=float, default=None,
                   help="plot ceiling above the ground state (default 8(a+1) hbar omega)")
    p.add_argument("--xrange", type=float, default=None,
                   help="half-width of the x grid (default: allowed width of the top level + 15%%)")
    p.set_defaults(fn=cmd_figure1)

    p = sub.add_parser("verify", help="run verification suites")
    common(p, fmt=("json",))
    p.add_argument("--suite", choices=("all",) + verify.SUITE_NAMES, default="all")
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ParameterDomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
