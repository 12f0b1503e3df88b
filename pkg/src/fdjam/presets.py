"""Named sweep presets mirroring the reference parameter studies (fig1-fig8).

Each preset returns (fieldnames, rows) where every row embeds the full
resolved parameter set, so the CSV is self-describing. Monte Carlo columns
carry their binomial standard error. Values the source captions leave open
(circuit power, some curve-family choices) are fixed here and documented
inline.
"""

from __future__ import annotations

import math
from collections.abc import Callable

import numpy as np

from . import metrics, optimize, outage
from .model import (
    CaseTag,
    DuplexMode,
    NetworkParams,
    OutageConstraints,
    build_outage_constraints,
)
from .outage import QuadratureSpec
from .simulate import SimulationConfig, estimate_pco, estimate_pso

PresetFn = Callable[[int, int, float, QuadratureSpec], tuple[list[str], list[dict]]]


def param_columns(params: NetworkParams) -> dict:
    return {
        "alpha": params.alpha,
        "lambda_l": params.lambda_l,
        "lambda_e": params.lambda_e,
        "n_e": params.n_e,
        "r_o": params.r_o,
        "p_t": params.p_t,
        "p_j": params.p_j,
        "eta": params.eta,
        "p_c": params.p_c,
    }


def _case_label(tag: CaseTag) -> str:
    return tag.value


def fig1(trials: int, seed: int, tol: float, quad: QuadratureSpec):
    """Connection outage vs q for several self-interference levels, with MC."""
    qs = np.linspace(0.0, 1.0, 11)
    etas = (0.0, 0.1, 1.0)
    rows = []
    for eta in etas:
        params = NetworkParams(
            alpha=4.0, lambda_l=3e-3, lambda_e=0.0, n_e=1, r_o=1.0,
            p_t=1.0, p_j=1.0, eta=eta,
        )
        for q in qs:
            config = SimulationConfig(
                window_radius=100.0, trials=trials, seed=seed, mode=DuplexMode.FD, q=q
            )
            mc = estimate_pco(params, config, tau_t=1.0)
            upper, lower = outage.pco_bounds(params, DuplexMode.FD, q, 1.0)
            rows.append({
                **param_columns(params),
                "tau_t": 1.0, "mode": "fd", "seed": seed, "trials": trials,
                "window_radius": config.window_radius, "q": q, "eta": eta,
                "pco_exact": outage.pco_exact(params, DuplexMode.FD, q, 1.0, quad),
                "pco_upper": upper, "pco_lower": lower,
                "pco_mc": mc.p_hat, "pco_mc_stderr": mc.std_err,
            })
    return list(rows[0]), rows


def _pso_window(params: NetworkParams, q: float, tau_e: float) -> float:
    # The jamming-field scale 1/sqrt(kappa*lambda_fd*rho^delta*tau_e^delta)
    # sets the geometry that matters for secrecy outage; r_o does not. The
    # floor keeps the censored far-field jamming well below the signal level
    # of the marginal eavesdroppers.
    scale = 1.0 / math.sqrt(
        params.kappa * q * params.lambda_l * params.rho**params.delta * tau_e**params.delta
    )
    return max(20.0 * params.r_o, 15.0 * scale, 60.0)


def fig2(trials: int, seed: int, tol: float, quad: QuadratureSpec):
    """Secrecy outage vs eavesdropper density for two link distances and
    two jammer densities, with MC. Antenna count fixed at 2."""
    lambda_es = np.logspace(-4, -2, 7)
    rows = []
    for r_o in (0.05, 0.5):
        for lam_fd in (1e-3, 1e-2):
            for lam_e in lambda_es:
                params = NetworkParams(
                    alpha=4.0, lambda_l=lam_fd, lambda_e=float(lam_e), n_e=2,
                    r_o=r_o, p_t=1.0, p_j=10.0, eta=0.0,
                )
                config = SimulationConfig(
                    window_radius=_pso_window(params, 1.0, 1.0),
                    trials=trials, seed=seed, mode=DuplexMode.FD, q=1.0,
                )
                mc = estimate_pso(params, config, tau_e=1.0)
                rows.append({
                    **param_columns(params),
                    "tau_e": 1.0, "mode": "fd", "seed": seed, "trials": trials,
                    "window_radius": config.window_radius,
                    "lambda_f": lam_fd, "q": 1.0,
                    "pso_upper": outage.pso_upper(params, DuplexMode.FD, 1.0, 1.0, quad),
                    "pso_fd_approx": outage.pso_fd_approx(params, 1.0, 1.0),
                    "pso_hd_closed": outage.pso_hd_closed(params, 1.0, 1.0),
                    "pso_mc": mc.p_hat, "pso_mc_stderr": mc.std_err,
                })
    return list(rows[0]), rows


def fig3(trials: int, seed: int, tol: float, quad: QuadratureSpec):
    """Link-density-optimal fraction vs legitimate density for several
    (r_o, rho) pairs."""
    lambda_ls = np.logspace(-3, -1, 13)
    rows = []
    for r_o, rho in ((0.5, 1.0), (1.0, 1.0), (1.0, 10.0)):
        for lam_l in lambda_ls:
            params = NetworkParams(
                alpha=4.0, lambda_l=float(lam_l), lambda_e=1e-3, n_e=6, r_o=r_o,
                p_t=1.0, p_j=rho, eta=0.1,
            )
            res = optimize.optimize_asln(params, tau_t=2.0, tau_e=1.0, tol=tol)
            rows.append({
                **param_columns(params),
                "tau_t": 2.0, "tau_e": 1.0, "rho": rho,
                "q_star": res.q_star, "case_tag": _case_label(res.case_tag),
                "asln_opt": res.objective,
            })
    return list(rows[0]), rows


def fig4(trials: int, seed: int, tol: float, quad: QuadratureSpec):
    """Secure link density vs antenna count for fixed fractions and the
    optimized fraction, at two jamming powers."""
    rows = []
    for rho in (1.0, 10.0):
        for n_e in range(1, 13):
            params = NetworkParams(
                alpha=3.0, lambda_l=1e-2, lambda_e=1e-3, n_e=n_e, r_o=1.0,
                p_t=1.0, p_j=rho, eta=10.0**-0.7,
            )
            res = optimize.optimize_asln(params, tau_t=2.0, tau_e=1.0, tol=tol)
            policies = [("opt", res.q_star), ("fixed_0.1", 0.1),
                        ("fixed_0.5", 0.5), ("fixed_1.0", 1.0)]
            for label, q in policies:
                rows.append({
                    **param_columns(params),
                    "tau_t": 2.0, "tau_e": 1.0, "rho": rho,
                    "q_policy": label, "q_value": q,
                    "asln": float(metrics.asln(params, q, 2.0, 1.0)),
                })
    return list(rows[0]), rows


def fig5(trials: int, seed: int, tol: float, quad: QuadratureSpec):
    """Throughput-optimal fraction vs legitimate density for several
    (r_o, sigma) pairs; includes the infeasible branch."""
    lambda_ls = np.logspace(-4, -1, 13)
    rows = []
    for r_o, sigma in ((1.0, 0.1), (1.0, 0.3), (2.0, 0.1), (2.0, 0.3)):
        for lam_l in lambda_ls:
            params = NetworkParams(
                alpha=4.0, lambda_l=float(lam_l), lambda_e=1e-4, n_e=4, r_o=r_o,
                p_t=1.0, p_j=2.0, eta=0.0,
            )
            cons = build_outage_constraints(params, sigma, 0.05)
            res = optimize.optimize_nst(params, cons, tol=tol)
            rows.append({
                **param_columns(params),
                "sigma": sigma, "epsilon": 0.05, "rho": params.rho,
                "q_star": res.q_star, "case_tag": _case_label(res.case_tag),
                "nst_opt": res.objective,
            })
    return list(rows[0]), rows


def fig6(trials: int, seed: int, tol: float, quad: QuadratureSpec):
    """Throughput density vs connection outage target for two path-loss
    exponents, optimized and fixed fractions."""
    sigmas = np.linspace(0.05, 0.9, 18)
    rows = []
    for alpha in (3.0, 4.0):
        for sigma in sigmas:
            params = NetworkParams(
                alpha=alpha, lambda_l=1e-3, lambda_e=1e-4, n_e=4, r_o=1.0,
                p_t=1.0, p_j=1.0, eta=0.0,
            )
            cons = build_outage_constraints(params, float(sigma), 0.01)
            res = optimize.optimize_nst(params, cons, tol=tol)
            policies = [("opt", res.q_star), ("fixed_0.1", 0.1), ("fixed_0.5", 0.5)]
            for label, q in policies:
                if q is None:
                    value = 0.0
                else:
                    value = float(metrics.nst(params, cons, q))
                rows.append({
                    **param_columns(params),
                    "sigma": float(sigma), "epsilon": 0.01,
                    "q_policy": label,
                    "q_value": math.nan if q is None else q,
                    "case_tag": _case_label(res.case_tag),
                    "nst": value,
                })
    return list(rows[0]), rows


def fig7(trials: int, seed: int, tol: float, quad: QuadratureSpec):
    """Efficiency-optimal fraction vs jamming power ratio for several outage
    target pairs; circuit power fixed at 0."""
    rhos = np.logspace(-1, 2, 16)
    rows = []
    for sigma, epsilon in ((0.1, 0.01), (0.3, 0.03), (0.3, 0.1)):
        for rho in rhos:
            params = NetworkParams(
                alpha=4.0, lambda_l=1e-3, lambda_e=1e-4, n_e=4, r_o=1.0,
                p_t=1.0, p_j=float(rho), eta=0.0,
            )
            cons = build_outage_constraints(params, sigma, epsilon)
            res = optimize.optimize_nsee(params, cons, tol=tol)
            rows.append({
                **param_columns(params),
                "sigma": sigma, "epsilon": epsilon, "rho": float(rho),
                "q_star": res.q_star, "case_tag": _case_label(res.case_tag),
                "nsee_opt": res.objective,
            })
    return list(rows[0]), rows


def fig8(trials: int, seed: int, tol: float, quad: QuadratureSpec):
    """Efficiency vs legitimate density, with and without the minimum
    throughput constraint (0.001), for several (rho, n_e) pairs."""
    lambda_ls = np.logspace(-5, -1, 17)
    omega_min = 1e-3
    rows = []
    for rho, n_e in ((1.0, 4.0), (10.0, 4.0), (1.0, 8.0)):
        for lam_l in lambda_ls:
            params = NetworkParams(
                alpha=4.0, lambda_l=float(lam_l), lambda_e=1e-4, n_e=int(n_e),
                r_o=1.0, p_t=1.0, p_j=rho, eta=0.0,
            )
            cons = build_outage_constraints(params, 0.3, 0.03)
            free = optimize.optimize_nsee(params, cons, tol=tol)
            gated = optimize.optimize_nsee_constrained(params, cons, omega_min, tol=tol)
            rows.append({
                **param_columns(params),
                "sigma": 0.3, "epsilon": 0.03, "rho": rho, "omega_min": omega_min,
                "q_star_unconstrained": free.q_star,
                "nsee_unconstrained": free.objective,
                "q_star_constrained": gated.q_star,
                "nsee_constrained": gated.objective,
            })
    return list(rows[0]), rows


PRESETS: dict[str, PresetFn] = {
    "fig1": fig1,
    "fig2": fig2,
    "fig3": fig3,
    "fig4": fig4,
    "fig5": fig5,
    "fig6": fig6,
    "fig7": fig7,
    "fig8": fig8,
}
