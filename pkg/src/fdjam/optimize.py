"""Optimal full-duplex fraction for each network objective.

Each objective is quasi-concave in q on its feasible range, so the search
reduces to a case split (infeasible / boundary q*=1 / interior root) plus
bisection on the sign surrogate of the derivative. A brute-force grid
oracle is included for independent verification of every optimizer.
"""

from __future__ import annotations

import math

import numpy as np

from . import metrics
from .errors import BracketError, ConvergenceError, DomainError
from .model import CaseTag, NetworkParams, OptimizationResult, OutageConstraints

# Effectively machine-exact: the midpoint-resolution check inside bisect
# stops the loop first, which keeps root-equation residuals tiny even when
# the surrogate is steep near a small q_m.
DEFAULT_TOL = 1e-18
DEFAULT_MAX_ITER = 200

# Lower bisection endpoint for the secure-link-density root: its surrogate
# K(q) diverges to +inf like C/q**2 as q -> 0+.
_Q_FLOOR = 1e-12


def bisect(
    f,
    lo: float,
    hi: float,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> float:
    """Root of f on [lo, hi] by bisection; deterministic.

    Requires a sign change between the endpoints. Stops once the interval
    width drops to tol or the midpoint hits floating-point resolution.
    """
    if not tol > 0:
        raise DomainError("tol must be positive")
    if not lo < hi:
        raise DomainError("lo must be below hi")
    f_lo = f(lo)
    f_hi = f(hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if (f_lo > 0.0) == (f_hi > 0.0):
        raise BracketError(f"f({lo:g})={f_lo:g} and f({hi:g})={f_hi:g} have the same sign")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            return mid
        f_mid = f(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid > 0.0) == (f_lo > 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid
        if hi - lo <= tol:
            return 0.5 * (lo + hi)
    raise ConvergenceError(f"no root to width {tol:g} within {max_iter} iterations")


def optimize_asln(
    params: NetworkParams, tau_t: float, tau_e: float, tol: float = DEFAULT_TOL
) -> OptimizationResult:
    """Fraction maximizing the secure link density at fixed SIR thresholds.

    Boundary case q* = 1 when the eavesdropper pressure C reaches
    1/A + B - 1; otherwise the unique root of K(q) = 0 in (0, 1].
    """
    aux = metrics.asln_coefficients(params, tau_t, tau_e)
    if aux.c == 0.0:
        raise DomainError(
            "lambda_e and n_e must be positive: with no eavesdropper pressure the "
            "density has no maximizer on (0, 1]"
        )
    if aux.c >= 1.0 / aux.a + aux.b - 1.0:
        return OptimizationResult(
            q_star=1.0,
            objective=float(metrics.asln(params, 1.0, tau_t, tau_e)),
            case_tag=CaseTag.BOUNDARY_ONE,
            residual=0.0,
        )

    def k_of_q(q: float) -> float:
        return metrics.asln_aux(params, q, tau_t, tau_e)[1]

    root = bisect(k_of_q, _Q_FLOOR, 1.0, tol)
    return OptimizationResult(
        q_star=root,
        objective=float(metrics.asln(params, root, tau_t, tau_e)),
        case_tag=CaseTag.INTERIOR_ROOT,
        residual=abs(k_of_q(root)),
    )


def asln_q_closed_sic(params: NetworkParams, tau_t: float, tau_e: float) -> float:
    """Closed-form interior fraction under perfect self-interference cancellation.

    sqrt(C/B), left unclamped: callers compare against 1 themselves.
    """
    if params.eta != 0.0:
        raise DomainError("eta must be 0 for the closed-form fraction")
    aux = metrics.asln_coefficients(params, tau_t, tau_e)
    return math.sqrt(aux.c / aux.b)


def optimize_nst(
    params: NetworkParams, constraints: OutageConstraints, tol: float = DEFAULT_TOL
) -> OptimizationResult:
    """Fraction maximizing the secrecy throughput density.

    Infeasible when no q in (0, 1] gives a positive rate gap; boundary
    q* = 1 when the gap still grows at 1 (phi(1) <= 0); otherwise the unique
    root of phi(q) = 0 in (q_m, 1].
    """
    if constraints.q_m is None or constraints.q_m >= 1.0:
        return OptimizationResult(None, 0.0, CaseTag.INFEASIBLE, 0.0)

    def phi_of_q(q: float) -> float:
        return metrics.nst_aux(params, constraints, q)[1]

    if phi_of_q(1.0) <= 0.0:
        return OptimizationResult(
            q_star=1.0,
            objective=float(metrics.nst(params, constraints, 1.0)),
            case_tag=CaseTag.BOUNDARY_ONE,
            residual=0.0,
        )
    root = bisect(phi_of_q, constraints.q_m + 1e-12, 1.0, tol)
    return OptimizationResult(
        q_star=root,
        objective=float(metrics.nst(params, constraints, root)),
        case_tag=CaseTag.INTERIOR_ROOT,
        residual=abs(phi_of_q(root)),
    )


def nst_q_dense_limit(params: NetworkParams, constraints: OutageConstraints) -> float:
    """Dense-network limit of the throughput-optimal fraction.

    Independent of lambda_l; requires delta_cap > 1 so the limit exists.
    """
    if not constraints.delta_cap > 1.0:
        raise DomainError("delta_cap must exceed 1 for the dense-network limit")
    return params.rho_neg_delta / (
        constraints.delta_cap ** (1.0 / (1.0 + params.delta)) - 1.0
    )


def optimize_nsee(
    params: NetworkParams, constraints: OutageConstraints, tol: float = DEFAULT_TOL
) -> OptimizationResult:
    """Fraction maximizing the secrecy energy efficiency.

    Same feasibility gate as the throughput objective; boundary q* = 1 while
    the efficiency still grows at 1 (Q(1) > 0, equivalently W/w(1) above
    delta*rho_c/(1+rho_c)); otherwise the unique root of Q(q) = 0.
    """
    if constraints.q_m is None or constraints.q_m >= 1.0:
        return OptimizationResult(None, 0.0, CaseTag.INFEASIBLE, 0.0)

    def q_of_q(q: float) -> float:
        return metrics.nsee_aux(params, constraints, q)[1]

    if q_of_q(1.0) > 0.0:
        return OptimizationResult(
            q_star=1.0,
            objective=float(metrics.nsee(params, constraints, 1.0)),
            case_tag=CaseTag.BOUNDARY_ONE,
            residual=0.0,
        )
    root = bisect(q_of_q, constraints.q_m + 1e-12, 1.0, tol)
    return OptimizationResult(
        q_star=root,
        objective=float(metrics.nsee(params, constraints, root)),
        case_tag=CaseTag.INTERIOR_ROOT,
        residual=abs(q_of_q(root)),
    )


def optimize_nsee_constrained(
    params: NetworkParams,
    constraints: OutageConstraints,
    omega_min: float,
    tol: float = DEFAULT_TOL,
) -> OptimizationResult:
    """Efficiency-optimal fraction subject to a minimum throughput density.

    If even the throughput-optimal fraction cannot exceed omega_min the
    problem is infeasible (efficiency reported as 0). Otherwise the
    unconstrained optimum is kept when it satisfies the constraint and is
    clamped to the nearer crossing point of the throughput level set when it
    does not; one- versus two-crossing disambiguation comes from the sign of
    the throughput at q = 1.
    """
    if omega_min < 0:
        raise DomainError("omega_min must be nonnegative")
    base = optimize_nsee(params, constraints, tol)
    if base.case_tag is CaseTag.INFEASIBLE or omega_min == 0.0:
        return base
    throughput = optimize_nst(params, constraints, tol)
    if not throughput.objective > omega_min:
        return OptimizationResult(None, 0.0, CaseTag.INFEASIBLE, 0.0)
    if base.case_tag is CaseTag.BOUNDARY_ONE:
        # Efficiency grows through q = 1 only if throughput does too, so the
        # constraint holds at the boundary.
        return base

    def gap(q: float) -> float:
        return float(metrics.nst(params, constraints, q)) - omega_min

    lo = constraints.q_m + 1e-12
    q_peak = throughput.q_star
    q_lower = lo if gap(lo) >= 0.0 else bisect(gap, lo, q_peak, tol)
    q_upper = 1.0 if gap(1.0) > 0.0 else bisect(gap, q_peak, 1.0, tol)
    q_ee = base.q_star
    if q_lower <= q_ee <= q_upper:
        return base
    pinned = q_lower if q_ee < q_lower else q_upper
    return OptimizationResult(
        q_star=pinned,
        objective=float(metrics.nsee(params, constraints, pinned)),
        case_tag=CaseTag.CONSTRAINED_ROOT,
        residual=abs(gap(pinned)),
    )


def grid_oracle(objective, lo: float, hi: float, step: float) -> tuple[float, float]:
    """Exhaustive argmax of a scalar objective on a uniform grid.

    Deterministic; ties resolve to the smallest q. The endpoint hi is always
    included. Used as the independent check of every bisection optimizer.
    """
    if not step > 0:
        raise DomainError("step must be positive")
    if not lo < hi:
        raise DomainError("lo must be below hi")
    count = int(math.floor((hi - lo) / step + 1e-9))
    qs = lo + step * np.arange(count + 1)
    if qs[-1] > hi:
        qs[-1] = hi
    elif hi - qs[-1] > step * 1e-6:
        qs = np.append(qs, hi)
    try:
        vals = np.asarray(objective(qs), dtype=float)
        if vals.shape != qs.shape:
            raise TypeError
    except (TypeError, ValueError):
        vals = np.array([float(objective(float(x))) for x in qs])
    idx = int(np.argmax(vals))
    return float(qs[idx]), float(vals[idx])
