"""Command-line front end emitting plot-ready tables as CSV or JSON.

Subcommands
-----------
resonance   critical wavenumber, collision frequency, residual
beta        coefficient values over a depth grid; --breakdown / --groups
zeros       critical depths where the coefficient vanishes
isola       band metadata plus sampled isola ellipse
selftest    compare against the stored arbitrary-precision fixtures

Conventions: data rows go to stdout, diagnostics to stderr; every float is
printed in shortest round-trip form; exit code 0 on success, 2 on usage
errors, 3 on numerical failures.  CSV uses a header row and '.' decimals
(isola band metadata appears as leading '#' comments); JSON is an array of
schema-tagged objects validating against ``schemas/output.schema.json``.
Grid evaluation may run on a thread pool capped by STOKES_ISOLA_THREADS;
rows are emitted in grid order regardless.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from .asymptotics import wavenumber_asymptote
from .beta import beta1, beta1_breakdown, beta_scan, find_beta_zeros
from .errors import StokesIsolasError
from .isola import IsolaParams, isola_geometry
from .resonance import build_resonance_data

SCHEMA_PATH = Path(__file__).parent / "schemas" / "output.schema.json"

USAGE_EXIT = 2
NUMERICAL_EXIT = 3


def _fmt(value):
    """Shortest round-trip text for one cell."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(float(value))
    return str(value)


def _emit(records: list[dict], fmt: str, comments: list[str] | None = None, fields=None):
    out = sys.stdout
    if fmt == "json":
        json.dump(records, out, indent=2, default=_fmt)
        out.write("\n")
        return
    if comments:
        for line in comments:
            out.write(f"# {line}\n")
    if fields is None:
        if not records:
            return
        fields = [k for k in records[0] if k != "schema"]
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(fields)
    for rec in records:
        writer.writerow([_fmt(rec[k]) for k in fields])


def _thread_count() -> int:
    env = os.environ.get("STOKES_ISOLA_THREADS")
    if env is None:
        return min(os.cpu_count() or 1, 8)
    try:
        n = int(env)
    except ValueError:
        raise SystemExit(
            f"error: STOKES_ISOLA_THREADS must be an integer, got {env!r}"
        ) from None
    return max(n, 1)


def _map_ordered(fn, items):
    items = list(items)
    workers = _thread_count()
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _h_grid(args, parser) -> list[float]:
    if args.h is not None:
        if args.h_min is not None or args.h_max is not None:
            parser.error("give either --h or --h-min/--h-max, not both")
        return [args.h]
    if args.h_min is None or args.h_max is None:
        parser.error("give --h, or both --h-min and --h-max")
    if not 0 < args.h_min < args.h_max:
        parser.error("need 0 < --h-min < --h-max")
    return [float(x) for x in np.linspace(args.h_min, args.h_max, args.n)]


def _add_grid_flags(sub, default_n=7):
    sub.add_argument("--h", type=float, help="single depth")
    sub.add_argument("--h-min", type=float, help="grid start")
    sub.add_argument("--h-max", type=float, help="grid end")
    sub.add_argument("--n", type=int, default=default_n, help="grid points")


def cmd_resonance(args, parser):
    if args.p < 2:
        parser.error(f"--p must be >= 2, got {args.p}")
    hs = _h_grid(args, parser)

    def row(h):
        rd = build_resonance_data(args.p, h)
        asym = wavenumber_asymptote(args.p, h) if args.p in (2, 3, 4) else None
        return {
            "schema": "resonance",
            "p": rd.p,
            "h": rd.h,
            "phi": rd.phi_star,
            "omega_star": rd.omega_star,
            "residual": rd.residual,
            "phi_asymptote": asym,
        }

    _emit(_map_ordered(row, hs), args.format)
    return 0


def cmd_beta(args, parser):
    if args.p not in (2, 3, 4):
        parser.error(f"--p must be one of 2, 3, 4 (closed forms), got {args.p}")
    hs = _h_grid(args, parser)

    if args.breakdown:
        records = []
        for bd in _map_ordered(lambda h: beta1_breakdown(args.p, h), hs):
            for tid, value in bd.terms.items():
                records.append(
                    {
                        "schema": "beta_term",
                        "p": bd.p,
                        "h": bd.h,
                        "term": tid.label,
                        "group": tid.group,
                        "sign": tid.sign,
                        "value": value,
                    }
                )
        _emit(records, args.format)
        return 0

    if args.groups:
        records = []
        for bd in _map_ordered(lambda h: beta1_breakdown(args.p, h), hs):
            records.append(
                {"schema": "beta_group", "p": bd.p, "h": bd.h, "group": "b0", "value": bd.b0}
            )
            for name, value in bd.group_sums.items():
                records.append(
                    {"schema": "beta_group", "p": bd.p, "h": bd.h, "group": name, "value": value}
                )
        _emit(records, args.format)
        return 0

    rows = beta_scan(args.p, hs)
    records = [
        {
            "schema": "scan",
            "h": r.h,
            "beta1": r.beta1,
            "leading": r.leading,
            "ratio": r.ratio,
            "floor_flag": r.floor_flag,
        }
        for r in rows
    ]
    _emit(records, args.format)
    return 0


def cmd_zeros(args, parser):
    if args.p not in (2, 3, 4):
        parser.error(f"--p must be one of 2, 3, 4 (closed forms), got {args.p}")
    if not 0 < args.h_min < args.h_max:
        parser.error("need 0 < --h-min < --h-max")
    zeros = find_beta_zeros(args.p, args.h_min, args.h_max, args.n, args.tol)
    records = [
        {"schema": "zero", "p": args.p, "h_star": z, "residual": beta1(args.p, z)}
        for z in zeros
    ]
    _emit(records, args.format, fields=["p", "h_star", "residual"])
    return 0


def cmd_isola(args, parser):
    for name in ("T1", "E"):
        if getattr(args, name) is None:
            parser.error(
                f"--{name} is required: it has no closed form here and must be supplied externally"
            )
    params = IsolaParams.from_depth(
        args.p, args.h, args.eps, args.T1, args.E, y0=args.y0, mu0=args.mu0
    )
    geo = isola_geometry(params, args.n)
    band = {
        "schema": "isola_band",
        "p": params.p,
        "h": params.h,
        "eps": params.eps,
        "beta1": params.beta1,
        "T1": params.T1,
        "E": params.E,
        "y0": params.y0,
        "mu0": params.mu0,
        "mu_low": geo.mu_low,
        "mu_high": geo.mu_high,
        "max_growth": geo.max_growth,
        "band_open": geo.band_open,
    }
    points = [
        {"schema": "isola_point", "x": float(x), "y": float(y)} for x, y in geo.ellipse
    ]
    if args.format == "json":
        _emit([band] + points, "json")
    else:
        comments = [f"{k} = {_fmt(v)}" for k, v in band.items() if k != "schema"]
        _emit(points, "csv", comments=comments)
    return 0


def cmd_selftest(args, parser):
    from .oracle import DEFAULT_FIXTURES, load_fixtures

    path = args.fixtures or DEFAULT_FIXTURES
    records = []
    failures = 0
    for p, h, oracle_value, digits in load_fixtures(path):
        bd = beta1_breakdown(p, h)
        diff = abs(bd.total - oracle_value)
        ok = diff <= bd.cancellation_floor
        failures += not ok
        records.append(
            {
                "schema": "selftest",
                "p": p,
                "h": h,
                "value": bd.total,
                "oracle": oracle_value,
                "abs_diff": diff,
                "floor": bd.cancellation_floor,
                "ok": ok,
            }
        )
    _emit(records, args.format)
    if failures:
        print(f"selftest: {failures} point(s) beyond the cancellation floor", file=sys.stderr)
        return NUMERICAL_EXIT
    print(f"selftest: {len(records)} points within the cancellation floor", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stokes-isolas",
        description="instability-isola coefficients of Stokes waves: tables and plot data",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(s):
        s.add_argument("--format", choices=("csv", "json"), default="csv")

    s = sub.add_parser("resonance", help="critical wavenumber and collision frequency")
    s.add_argument("--p", type=int, required=True, help="isola index, any integer >= 2")
    _add_grid_flags(s)
    add_common(s)
    s.set_defaults(func=cmd_resonance)

    s = sub.add_parser("beta", help="instability coefficient over depth")
    s.add_argument("--p", type=int, required=True, help="isola index in {2, 3, 4}")
    _add_grid_flags(s)
    s.add_argument("--breakdown", action="store_true", help="emit every term")
    s.add_argument("--groups", action="store_true", help="emit group sums")
    add_common(s)
    s.set_defaults(func=cmd_beta)

    s = sub.add_parser("zeros", help="critical depths where the coefficient vanishes")
    s.add_argument("--p", type=int, required=True, help="isola index in {2, 3, 4}")
    s.add_argument("--h-min", type=float, required=True)
    s.add_argument("--h-max", type=float, required=True)
    s.add_argument("--n", type=int, default=2000, help="scan grid intervals")
    s.add_argument("--tol", type=float, default=1e-8, help="bisection width on h")
    add_common(s)
    s.set_defaults(func=cmd_zeros)

    s = sub.add_parser("isola", help="band endpoints and sampled isola ellipse")
    s.add_argument("--p", type=int, required=True, choices=(2, 3, 4))
    s.add_argument("--h", type=float, required=True)
    s.add_argument("--eps", type=float, required=True, help="wave amplitude")
    s.add_argument("--T1", type=float, help="band-width function T1(h) > 0 (external input)")
    s.add_argument("--E", type=float, help="ellipse eccentricity function E(h) in (0,1) (external input)")
    s.add_argument("--y0", type=float, help="center ordinate; default: collision frequency")
    s.add_argument("--mu0", type=float, help="band center; default: critical wavenumber")
    s.add_argument("--n", type=int, default=64, help="ellipse samples")
    add_common(s)
    s.set_defaults(func=cmd_isola)

    s = sub.add_parser("selftest", help="compare against stored oracle fixtures")
    s.add_argument("--fixtures", type=Path, help="fixture file override")
    add_common(s)
    s.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except StokesIsolasError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return NUMERICAL_EXIT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT


if __name__ == "__main__":
    sys.exit(main())
