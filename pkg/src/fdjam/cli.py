"""Command-line entry point: evaluate, optimize, simulate, sweep, validate.

Results are written as CSV (snake_case headers, one header line, `.` decimal
separator, UTF-8) with every row embedding the full resolved parameter set.
Output is deterministic for a fixed seed and configuration: reruns produce
byte-identical files.

Exit codes: 0 ok, 1 validation failure, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from pathlib import Path

import numpy as np

from . import config as cfg
from . import optimize, outage, presets
from .errors import (
    BracketError,
    ConfigError,
    ConvergenceError,
    DomainError,
    NumericalError,
    QuadratureError,
)
from .model import DuplexMode, build_outage_constraints
from .simulate import SimulationConfig, estimate_pco, estimate_pso


def _format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        return format(value, ".12g")
    return str(value)


def write_csv(path: Path, fieldnames: list[str], rows: list[dict]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(fieldnames)
        for row in rows:
            writer.writerow([_format_cell(row.get(name)) for name in fieldnames])


def _out_path(args, name: str) -> Path:
    return Path(args.out) / f"{name}.csv"


_ANALYTIC_FORMULAS = (
    "pco_exact",
    "pco_upper",
    "pco_lower",
    "pso_upper",
    "pso_hd_closed",
    "pso_fd_approx",
)


def _analytic_value(formula: str, params, mode, q: float, tau: float, quad) -> float:
    if formula == "pco_exact":
        return outage.pco_exact(params, mode, q, tau, quad)
    if formula == "pco_upper":
        return outage.pco_bounds(params, mode, q, tau)[0]
    if formula == "pco_lower":
        return outage.pco_bounds(params, mode, q, tau)[1]
    if formula == "pso_upper":
        return outage.pso_upper(params, mode, q, tau, quad)
    if formula == "pso_hd_closed":
        return outage.pso_hd_closed(params, q, tau)
    return outage.pso_fd_approx(params, q, tau)


def cmd_analytic(args) -> int:
    parser = cfg.read_config(args.config)
    params = cfg.network_from_config(parser)
    tau_t, tau_e = cfg.sir_thresholds_from_config(parser)
    quad = cfg.quadrature_from_config(parser)
    mode = DuplexMode(args.mode)
    tau = tau_t if args.formula.startswith("pco") else tau_e
    qs = np.linspace(args.q_from, args.q_to, args.points)
    rows = []
    for q in qs:
        rows.append({
            **presets.param_columns(params),
            "mode": mode.value, "tau_t": tau_t, "tau_e": tau_e, "q": float(q),
            "formula": args.formula,
            "value": _analytic_value(args.formula, params, mode, float(q), tau, quad),
        })
    path = _out_path(args, f"analytic_{args.formula}")
    write_csv(path, list(rows[0]), rows)
    print(f"wrote {path} ({len(rows)} rows)")
    return 0


def cmd_optimize(args) -> int:
    parser = cfg.read_config(args.config)
    params = cfg.network_from_config(parser)
    tol = args.tol if args.tol is not None else optimize.DEFAULT_TOL
    row = {**presets.param_columns(params), "objective_name": args.objective}
    if args.objective == "asln":
        tau_t, tau_e = cfg.sir_thresholds_from_config(parser)
        result = optimize.optimize_asln(params, tau_t, tau_e, tol=tol)
        row.update({"tau_t": tau_t, "tau_e": tau_e})
    else:
        sigma, epsilon = cfg.outage_targets_from_config(parser)
        constraints = build_outage_constraints(params, sigma, epsilon)
        row.update({"sigma": sigma, "epsilon": epsilon})
        if args.objective == "nst":
            result = optimize.optimize_nst(params, constraints, tol=tol)
        elif args.objective == "nsee":
            result = optimize.optimize_nsee(params, constraints, tol=tol)
        else:
            omega_min = cfg.omega_min_from_config(parser)
            row["omega_min"] = omega_min
            result = optimize.optimize_nsee_constrained(
                params, constraints, omega_min, tol=tol
            )
    row.update({
        "q_star": result.q_star,
        "objective": result.objective,
        "case_tag": result.case_tag.value,
        "residual": result.residual,
    })
    path = _out_path(args, f"optimize_{args.objective}")
    write_csv(path, list(row), [row])
    print(
        f"{args.objective}: case={result.case_tag.value} q_star={result.q_star} "
        f"objective={result.objective:.6g}"
    )
    return 0


def cmd_simulate(args) -> int:
    parser = cfg.read_config(args.config)
    params = cfg.network_from_config(parser)
    tau_t, tau_e = cfg.sir_thresholds_from_config(parser)
    quad = cfg.quadrature_from_config(parser)
    sim = cfg.simulation_from_config(parser, params, trials=args.trials, seed=args.seed)
    row = {
        **presets.param_columns(params),
        "mode": sim.mode.value, "q": sim.q, "tau_t": tau_t, "tau_e": tau_e,
        "trials": sim.trials, "seed": sim.seed, "window_radius": sim.window_radius,
    }
    if args.target == "pco":
        est = estimate_pco(params, sim, tau_t)
        row.update({
            "pco_mc": est.p_hat, "pco_mc_stderr": est.std_err,
            "pco_exact": outage.pco_exact(params, sim.mode, sim.q, tau_t, quad),
        })
    else:
        est = estimate_pso(params, sim, tau_e)
        row.update({
            "pso_mc": est.p_hat, "pso_mc_stderr": est.std_err,
            "ill_conditioned": est.ill_conditioned,
            "pso_upper": outage.pso_upper(params, sim.mode, sim.q, tau_e, quad),
        })
    path = _out_path(args, f"simulate_{args.target}")
    write_csv(path, list(row), [row])
    print(f"{args.target}: p_hat={est.p_hat:.6g} std_err={est.std_err:.3g}")
    return 0


def cmd_sweep(args) -> int:
    preset = presets.PRESETS[args.preset]
    quad = outage.QuadratureSpec()
    tol = args.tol if args.tol is not None else optimize.DEFAULT_TOL
    fieldnames, rows = preset(args.trials, args.seed, tol, quad)
    path = _out_path(args, args.preset)
    write_csv(path, fieldnames, rows)
    print(f"wrote {path} ({len(rows)} rows)")
    return 0


def _validate_checks(trials: int, seed: int) -> list[tuple[str, bool, str]]:
    from .model import NetworkParams

    checks = []
    quad = outage.QuadratureSpec()
    # connection outage: MC against the exact quadrature on the fig1 grid
    for eta in (0.0, 0.1, 1.0):
        params = NetworkParams(
            alpha=4.0, lambda_l=3e-3, lambda_e=0.0, n_e=1, r_o=1.0,
            p_t=1.0, p_j=1.0, eta=eta,
        )
        for q in (0.0, 0.25, 0.5, 0.75, 1.0):
            sim = SimulationConfig(
                window_radius=100.0, trials=trials, seed=seed, mode=DuplexMode.FD, q=q
            )
            est = estimate_pco(params, sim, 1.0)
            exact = outage.pco_exact(params, DuplexMode.FD, q, 1.0, quad)
            gap = abs(est.p_hat - exact)
            ok = gap <= 3.0 * max(est.std_err, 1e-12)
            checks.append((
                f"pco mc vs exact (q={q}, eta={eta})", ok,
                f"|{est.p_hat:.5f} - {exact:.5f}| = {gap:.2g} vs 3se = {3*est.std_err:.2g}",
            ))
    # secrecy outage: MC under the analytic upper bound on the fig2 grid
    for r_o in (0.05, 0.5):
        for lam_fd in (1e-3, 1e-2):
            params = NetworkParams(
                alpha=4.0, lambda_l=lam_fd, lambda_e=1e-3, n_e=2, r_o=r_o,
                p_t=1.0, p_j=10.0, eta=0.0,
            )
            sim = SimulationConfig(
                window_radius=presets._pso_window(params, 1.0, 1.0),
                trials=trials, seed=seed, mode=DuplexMode.FD, q=1.0,
            )
            est = estimate_pso(params, sim, 1.0)
            bound = outage.pso_upper(params, DuplexMode.FD, 1.0, 1.0, quad)
            ok = est.p_hat <= bound + 3.0 * est.std_err
            checks.append((
                f"pso mc under bound (r_o={r_o}, lambda_f={lam_fd})", ok,
                f"p_hat={est.p_hat:.5f} bound={bound:.5f} 3se={3*est.std_err:.2g}",
            ))
    return checks


def cmd_validate(args) -> int:
    checks = _validate_checks(args.trials, args.seed)
    failures = 0
    for name, ok, detail in checks:
        print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
        failures += not ok
    if failures:
        print(f"{failures} of {len(checks)} checks failed")
        return 1
    print(f"all {len(checks)} checks passed")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fdjam",
        description=(
            "Outage, throughput and energy-efficiency analysis of ad hoc "
            "networks with a tunable fraction of full-duplex jamming receivers"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analytic", help="evaluate an outage formula on a q grid")
    p.add_argument("--config", required=True, help="INI config path")
    p.add_argument("--formula", required=True, choices=_ANALYTIC_FORMULAS)
    p.add_argument("--mode", choices=("hd", "fd"), default="fd")
    p.add_argument("--q-from", type=float, default=0.0)
    p.add_argument("--q-to", type=float, default=1.0)
    p.add_argument("--points", type=int, default=21)
    p.add_argument("--out", default=".")
    p.set_defaults(func=cmd_analytic)

    p = sub.add_parser("optimize", help="solve for the optimal FD fraction")
    p.add_argument("objective", choices=("asln", "nst", "nsee", "nsee-constrained"))
    p.add_argument("--config", required=True)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--out", default=".")
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("simulate", help="Monte Carlo outage estimate")
    p.add_argument("--target", required=True, choices=("pco", "pso"))
    p.add_argument("--config", required=True)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=".")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("sweep", help="run a named preset sweep to CSV")
    p.add_argument("--preset", required=True, choices=sorted(presets.PRESETS))
    p.add_argument("--trials", type=int, default=20000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--out", default=".")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("validate", help="compare MC estimates against analytics")
    p.add_argument("--trials", type=int, default=100000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_validate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 2
    except (QuadratureError, BracketError, ConvergenceError, NumericalError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
