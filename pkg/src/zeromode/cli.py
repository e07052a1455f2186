"""
Command-line entry point: ``zeromode <subcommand> [options]``.

Every sweep writes a table with a fixed header row. CSV floats use 17
significant digits, divergent values are written as ``inf``. JSON output is
``{"meta": {...}, "rows": [...]}`` with the same rows.

Exit codes: 0 success, 1 oracle check failure, 2 usage or I/O error,
3 numerical error raised by the library.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import warnings
from concurrent.futures import ProcessPoolExecutor
from functools import partial

import numpy as np

from . import __version__
from . import checks
from . import closed_forms as cf
from . import hydrogen as hy
from . import lattice as lt
from . import tripartite as tp
from .core import DEFAULT_ZERO_TOL
from .errors import ZeroModeError
from .quadrature import QuadratureConfig

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_grid(text: str) -> np.ndarray:
    """``start:stop:count`` (linear) or ``start:stop:count:geom`` (geometric)."""
    parts = text.split(":")
    if len(parts) not in (3, 4) or (len(parts) == 4 and parts[3] not in ("lin", "geom")):
        raise UsageError(f"bad grid spec {text!r}; expected start:stop:count[:geom]")
    try:
        start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise UsageError(f"bad grid spec {text!r}: {exc}") from None
    if count < 2 or start == stop:
        raise UsageError("grid needs count >= 2 and start != stop")
    if len(parts) == 4 and parts[3] == "geom":
        if start * stop <= 0:
            raise UsageError("geometric grid needs nonzero end points of the same sign")
        return np.geomspace(start, stop, count)
    return np.linspace(start, stop, count)


def _fmt(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (float, np.floating)):
        v = float(v)
        if math.isnan(v):
            return "nan"
        if math.isinf(v):
            return "inf" if v > 0 else "-inf"
        return format(v + 0.0, ".17g")  # + 0.0 turns -0 into 0
    return str(v)


def _json_safe(v):
    if isinstance(v, dict):
        return {k: _json_safe(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_json_safe(x) for x in v]
    if isinstance(v, (np.floating, float)):
        v = float(v)
        return v if math.isfinite(v) else _fmt(v)
    if isinstance(v, np.bool_):
        return bool(v)
    if isinstance(v, np.integer):
        return int(v)
    return v


def render(columns: list[str], rows: list[dict], meta: dict, fmt: str) -> str:
    if fmt == "json":
        doc = {"meta": _json_safe(meta), "rows": [_json_safe({c: r[c] for c in columns}) for r in rows]}
        return json.dumps(doc, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([_fmt(r[c]) for c in columns])
    return buf.getvalue()


def emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {out}: {exc.strerror}") from None


def _map(fn, points, jobs: int) -> list:
    if jobs > 1 and len(points) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, points))
    return [fn(p) for p in points]


###############################################################################
# Per-point workers (module level so they pickle)
###############################################################################


def _fig1_row(r: float) -> dict:
    xi = cf.xi_of_R(r)
    s = cf.entropy_closed(r)
    return {"R": r, "xi": xi, "S": s.nats, "divergent": s.divergent}


def _fig2_row(r: float, omega_plus: float, mass: float, hbar: float) -> dict:
    s = cf.free_particle_entropy(omega_plus, r * omega_plus, mass=mass, hbar=hbar)
    return {"R": r, "S": s.nats, "divergent": s.divergent}


def _fig4_row(eps: float) -> dict:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        lam = cf.distorted_lambda(eps)
        s = cf.distorted_entropy(eps).nats
    return {"eps": eps, "lambda": lam, "S": s, "beyond_small_eps": bool(abs(eps) > cf.EPS_WARN)}


def _tripartite_row(delta: float, alpha_t: float, beta_t: float, zero_tol: float) -> dict:
    k = (alpha_t**2 + beta_t**2) * (1.0 + delta)
    regime = tp.classify((alpha_t, beta_t, k), zero_tol)
    if regime.label == tp.INVERTED:
        s1 = s2 = math.nan
    else:
        s1 = tp.entropy_x1((alpha_t, beta_t, k), zero_tol).nats
        s2 = tp.entropy_x2((alpha_t, beta_t, k), zero_tol).nats
    return {"delta": delta, "k": k, "kappa2": regime.kappa2, "regime": regime.label, "S1": s1, "S2": s2}


def _lattice_row(mu: float, n: int, a: float, zero_tol: float) -> dict:
    modes = lt.transformed_modes(mu=mu, N=n)
    return {
        "mu": mu,
        "m_f": lt.mu_to_mass(mu, a),
        "omega_bar_0": float(modes.omega_bar[0]),
        "zero_modes": lt.zero_mode_count(modes, zero_tol),
        "S": lt.mu_entropy(mu, n, zero_tol).nats,
    }


###############################################################################
# Subcommands
###############################################################################


def _meta(args, **extra) -> dict:
    meta = {"command": args.command, "version": __version__, "numpy": np.__version__,
            "grid": args.grid, "zero_tol": args.zero_tol, "rel_tol": args.rel_tol}
    meta.update(extra)
    return meta


def cmd_fig1(args) -> int:
    grid = parse_grid(args.grid)
    if args.include_zero and grid[0] != 0.0:
        grid = np.concatenate([[0.0], grid])
    rows = _map(_fig1_row, list(grid), args.jobs)
    emit(render(["R", "xi", "S", "divergent"], rows, _meta(args), args.format), args.out)
    return EXIT_OK


def cmd_fig2(args) -> int:
    grid = parse_grid(args.grid)
    fn = partial(_fig2_row, omega_plus=args.omega_plus, mass=args.mass, hbar=args.hbar)
    rows = _map(fn, list(grid), args.jobs)
    meta = _meta(args, omega_plus=args.omega_plus, mass=args.mass, hbar=args.hbar,
                 energy_minus=cf.ir_energy_choice(args.omega_plus, args.hbar))
    emit(render(["R", "S", "divergent"], rows, meta, args.format), args.out)
    return EXIT_OK


SUMMARY_COLUMNS = ["zeta", "S", "S_closed_form", "error_estimate", "eta_spread"]


def cmd_fig3(args) -> int:
    kappa = parse_grid(args.grid)
    try:
        zetas = [float(z) for z in args.zeta.split(",")]
    except ValueError:
        raise UsageError(f"bad --zeta list {args.zeta!r}") from None
    quad = QuadratureConfig(rel_tol=args.rel_tol)
    rows, summary = [], []
    for zeta in zetas:
        literal = hy.g_integrand_literal(kappa, args.eta, zeta)
        exact = hy.g_integrand(kappa, args.eta, zeta)
        for kp, gp, ge in zip(kappa, literal, exact):
            rows.append({"zeta": zeta, "kappa": float(kp), "g_literal": float(gp), "g_exact": float(ge)})
        s = hy.hydrogen_entropy(args.eta, zeta, quad)
        others = [hy.entropy_integral(e * args.eta, zeta, quad)[0] for e in (0.5, 2.0)]
        summary.append({"zeta": zeta, "S": s.nats, "S_closed_form": hy.closed_form_entropy(zeta),
                        "error_estimate": s.error_estimate,
                        "eta_spread": max(others + [s.nats]) - min(others + [s.nats])})
    meta = _meta(args, eta=args.eta, entropy=summary)
    emit(render(["zeta", "kappa", "g_literal", "g_exact"], rows, meta, args.format), args.out)
    if args.summary:
        emit(render(SUMMARY_COLUMNS, summary, _meta(args, eta=args.eta), "csv"),
             args.summary)
    return EXIT_OK


def cmd_fig4(args) -> int:
    grid = parse_grid(args.grid)
    rows = _map(_fig4_row, list(grid), args.jobs)
    emit(render(["eps", "lambda", "S", "beyond_small_eps"], rows, _meta(args), args.format), args.out)
    return EXIT_OK


def cmd_tripartite(args) -> int:
    grid = parse_grid(args.grid)
    fn = partial(_tripartite_row, alpha_t=args.alpha, beta_t=args.beta, zero_tol=args.zero_tol)
    rows = _map(fn, list(grid), args.jobs)
    meta = _meta(args, alpha=args.alpha, beta=args.beta)
    emit(render(["delta", "k", "kappa2", "regime", "S1", "S2"], rows, meta, args.format), args.out)
    return EXIT_OK


def cmd_lattice(args) -> int:
    grid = parse_grid(args.grid)
    if np.any((grid <= 0) | (grid > 1)):
        raise UsageError("lattice-sweep grid is over mu and must lie in (0, 1]")
    fn = partial(_lattice_row, n=args.n, a=args.a, zero_tol=args.zero_tol)
    rows = _map(fn, list(grid), args.jobs)
    meta = _meta(args, N=args.n, a=args.a)
    emit(render(["mu", "m_f", "omega_bar_0", "zero_modes", "S"], rows, meta, args.format), args.out)
    return EXIT_OK


def cmd_oracle(args) -> int:
    results = checks.run_oracle_suite(args.check or None)
    if args.check and len(results) != len(args.check):
        known = {name for name, _ in checks.REGISTRY}
        raise UsageError(f"unknown check(s): {', '.join(sorted(set(args.check) - known))}")
    report = checks.build_report(results, timings=args.timings)
    emit(json.dumps(report, indent=2) + "\n", args.out)
    for r in results:
        line = f"{r.status:<22} {r.name}"
        if args.timings:
            line += f"  ({r.wall_time:.3f} s)"
        print(line, file=sys.stderr)
    return EXIT_OK if report["ok"] else EXIT_CHECK


###############################################################################
# Parser
###############################################################################


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default=None, help="output path (default: stdout)")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")
    common.add_argument("--zero-tol", type=float, default=DEFAULT_ZERO_TOL)
    common.add_argument("--rel-tol", type=float, default=1e-8)

    p = argparse.ArgumentParser(prog="zeromode", description="Entanglement entropy near zero-modes.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("fig1", parents=[common], help="closed-form entropy vs R")
    s.add_argument("--grid", default="1e-4:1:200:geom")
    s.add_argument("--no-zero", dest="include_zero", action="store_false",
                   help="omit the divergent R = 0 row")
    s.set_defaults(func=cmd_fig1)

    s = sub.add_parser("fig2", parents=[common], help="plane-wave entropy with the IR energy choice")
    s.add_argument("--grid", default="1e-4:1:200:geom")
    s.add_argument("--omega-plus", type=float, default=1.0)
    s.add_argument("--mass", type=float, default=1.0)
    s.add_argument("--hbar", type=float, default=1.0)
    s.set_defaults(func=cmd_fig2)

    s = sub.add_parser("fig3", parents=[common], help="hydrogen entropy integrand vs kappa")
    s.add_argument("--grid", default="0:4:161")
    s.add_argument("--eta", type=float, default=1.0)
    s.add_argument("--zeta", default="1e-1,1e-2,1e-3", help="comma-separated zeta values")
    s.add_argument("--summary", default=None, help="also write integrated entropies (CSV) here")
    s.set_defaults(func=cmd_fig3)

    s = sub.add_parser("fig4", parents=[common], help="distorted-coordinate entropy vs eps")
    s.add_argument("--grid", default="0:0.5:51")
    s.set_defaults(func=cmd_fig4)

    s = sub.add_parser("tripartite-sweep", parents=[common], help="S1, S2 approaching the zero-mode")
    s.add_argument("--grid", default="1e-10:1:50:geom", help="delta, with k = (a^2 + b^2)(1 + delta)")
    s.add_argument("--alpha", type=float, default=1.0)
    s.add_argument("--beta", type=float, default=1.0)
    s.set_defaults(func=cmd_tripartite)

    s = sub.add_parser("lattice-sweep", parents=[common], help="half-chain entropy vs mu")
    s.add_argument("--grid", default="0.5:0.9999:40")
    s.add_argument("--n", type=int, default=32)
    s.add_argument("--a", type=float, default=1.0)
    s.set_defaults(func=cmd_lattice)

    s = sub.add_parser("oracle", parents=[common], help="run the cross-check suite, write a JSON report")
    s.add_argument("--grid", default=None, help=argparse.SUPPRESS)
    s.add_argument("--check", action="append", help="run only this check (repeatable)")
    s.add_argument("--timings", action="store_true", help="include wall times in the report")
    s.set_defaults(func=cmd_oracle)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    if args.jobs < 1:
        print("zeromode: error: --jobs must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"zeromode: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ZeroModeError, ValueError, ArithmeticError) as exc:
        print(f"zeromode: numerical error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
