"""Network-wide security objectives and the auxiliary functions they expose.

Three objectives of the full-duplex receiver fraction q:

* secure link density: expected number of links per unit area that suffer
  neither connection nor secrecy outage at fixed code rates;
* secrecy throughput density: rate delivered per unit area under outage
  targets (sigma, epsilon), using the perfect-cancellation design thresholds;
* secrecy energy efficiency: throughput density per unit-area power draw.

Every evaluator accepts a scalar q or an array of q values and is a pure
function of immutable inputs, so grid sweeps parallelize freely.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .model import NetworkParams, OutageConstraints


@dataclass(frozen=True)
class AslnAux:
    """Constants behind the secure-link-density shape F(q) = (qA+1-q)e^{-Bq-C/q}.

    a: self-interference survival factor exp(-rho*eta*r_o**alpha*tau_t), in (0, 1];
    b: jamming exposure of legitimate links, kappa*r_o**2*tau_t**delta*rho**delta*lambda_l;
    c: eavesdropper pressure per unit jammer density, pi*lambda_e*n_e/(kappa*lambda_l*rho**delta*tau_e**delta).
    """

    a: float
    b: float
    c: float


@dataclass(frozen=True)
class NstAux:
    """Constants of the throughput objective's case analysis.

    beta1/beta2 scale the connection/secrecy threshold terms; x_thresh and
    y_thresh split the eavesdropper pressure pi*lambda_e*n_e/epsilon_o into
    the infeasible, boundary (q*=1) and interior-root cases.
    """

    beta1: float
    beta2: float
    x_thresh: float
    y_thresh: float


@dataclass(frozen=True)
class NseeAux:
    """Constant of the energy-efficiency boundary test.

    w_cap equals delta * w'(1): positive growth of the rate gap at q = 1
    keeps the optimum pinned at the boundary while jamming is cheap.
    """

    w_cap: float


def _q_array(q, *, closed_zero: bool = False):
    arr = np.asarray(q, dtype=float)
    low_bad = np.any(arr < 0.0) if closed_zero else np.any(arr <= 0.0)
    if low_bad or np.any(arr > 1.0):
        lo = "[0, 1]" if closed_zero else "(0, 1]"
        raise DomainError(f"q must lie in {lo}")
    return arr


def _maybe_scalar(value, q):
    return float(value) if np.isscalar(q) else value


def asln_coefficients(
    params: NetworkParams, tau_t: float, tau_e: float
) -> AslnAux:
    """Auxiliary constants (A, B, C) of the secure link density."""
    if not tau_t > 0 or not tau_e > 0:
        raise DomainError("tau_t and tau_e must be positive")
    a = math.exp(-params.rho * params.eta * params.r_o**params.alpha * tau_t)
    rd = params.rho**params.delta
    b = params.kappa * params.r_o**2 * tau_t**params.delta * rd * params.lambda_l
    if params.lambda_e * params.n_e == 0:
        c = 0.0
    elif params.rho == 0:
        c = math.inf
    else:
        c = math.pi * params.lambda_e * params.n_e / (
            params.kappa * params.lambda_l * rd * tau_e**params.delta
        )
    return AslnAux(a=a, b=b, c=c)


def asln(params: NetworkParams, q, tau_t: float, tau_e: float):
    """Secure link density at fraction q, for fixed SIR thresholds.

    Uses the closed-form outage surrogates (upper-bounded connection outage,
    many-antenna secrecy outage) so that q enters only through the shape
    function F(q).
    """
    aux = asln_coefficients(params, tau_t, tau_e)
    qa = _q_array(q)
    f = (qa * aux.a + 1.0 - qa) * np.exp(-aux.b * qa - aux.c / qa)
    prefactor = params.lambda_l * math.exp(
        -params.kappa * params.r_o**2 * tau_t**params.delta * params.lambda_l
    )
    return _maybe_scalar(prefactor * f, q)


def asln_general(
    params: NetworkParams,
    q,
    pco_hd: float,
    pso_hd: float,
    pco_fd: float,
    pso_fd: float,
):
    """Secure link density from caller-supplied outage probabilities.

    Entry point for plugging the exact quadrature expressions (or measured
    estimates) into the definition instead of the closed-form surrogates.
    """
    for name, p in (
        ("pco_hd", pco_hd), ("pso_hd", pso_hd), ("pco_fd", pco_fd), ("pso_fd", pso_fd)
    ):
        if not 0.0 <= p <= 1.0:
            raise DomainError(f"{name} must lie in [0, 1]")
    qa = _q_array(q, closed_zero=True)
    val = params.lambda_l * (
        qa * (1.0 - pco_fd) * (1.0 - pso_fd)
        + (1.0 - qa) * (1.0 - pco_hd) * (1.0 - pso_hd)
    )
    return _maybe_scalar(val, q)


def asln_aux(params: NetworkParams, q, tau_t: float, tau_e: float):
    """Shape function F(q) and its sign surrogate K(q).

    sign(F'(q)) = sign(K(q)); K decreases through the unique interior
    maximizer when one exists.
    """
    aux = asln_coefficients(params, tau_t, tau_e)
    qa = _q_array(q)
    f = (qa * aux.a + 1.0 - qa) * np.exp(-aux.b * qa - aux.c / qa)
    k = (aux.a + 1.0 / qa - 1.0) * (1.0 + aux.c / qa - aux.b * qa) - 1.0 / qa
    return _maybe_scalar(f, q), _maybe_scalar(k, q)


def nst_thresholds(params: NetworkParams, constraints: OutageConstraints, q):
    """Design SIR thresholds meeting the outage targets at fraction q.

    Perfect-cancellation design: the connection threshold spends sigma_o
    against the combined interferer exposure lambda_l*(1+rho**delta*q); the
    secrecy threshold spends epsilon_o against the jammer field rho**delta*
    q*lambda_l. Both decrease in q; they cross exactly at q_m.
    """
    qa = _q_array(q)
    if params.rho == 0:
        raise DomainError("p_j must be positive for the design thresholds")
    half_alpha = params.alpha / 2.0
    rd = params.rho**params.delta
    tau_t_o = (
        constraints.sigma_o
        / (params.kappa * params.lambda_l * (1.0 + rd * qa) * params.r_o**2)
    ) ** half_alpha
    tau_e_o = (
        math.pi * params.lambda_e * params.n_e
        / (params.kappa * rd * qa * params.lambda_l * constraints.epsilon_o)
    ) ** half_alpha
    return _maybe_scalar(tau_t_o, q), _maybe_scalar(tau_e_o, q)


def _beta1(params: NetworkParams, constraints: OutageConstraints) -> float:
    return (
        constraints.sigma_o / (params.kappa * params.lambda_l * params.r_o**2)
    ) ** (params.alpha / 2.0)


def _beta2(params: NetworkParams, constraints: OutageConstraints) -> float:
    return (
        math.pi * params.lambda_e * params.n_e
        / (params.kappa * params.lambda_l * constraints.epsilon_o)
    ) ** (params.alpha / 2.0)


def _w_terms(params: NetworkParams, constraints: OutageConstraints, qa):
    """t1 = tau_t_o(q), t2 = tau_e_o(q), the rate-gap value w and slope w'."""
    half_alpha = params.alpha / 2.0
    rd = params.rho**params.delta
    s = rd * qa
    t1 = _beta1(params, constraints) * (1.0 + s) ** -half_alpha
    t2 = _beta2(params, constraints) * s**-half_alpha
    w = np.log1p(t1) - np.log1p(t2)
    w_prime = -rd / (params.delta * (1.0 + s)) * t1 / (1.0 + t1) + (
        1.0 / (params.delta * qa)
    ) * t2 / (1.0 + t2)
    return t1, t2, w, w_prime


def nst(params: NetworkParams, constraints: OutageConstraints, q):
    """Secrecy throughput density at fraction q (0 when infeasible)."""
    qa = _q_array(q)
    if params.rho == 0:
        return _maybe_scalar(np.zeros_like(qa), q)
    _, _, w, _ = _w_terms(params, constraints, qa)
    return _maybe_scalar(
        params.lambda_l * (1.0 - constraints.sigma) * np.maximum(w, 0.0), q
    )


def nst_general(params: NetworkParams, q, sigma: float, r_s_hd: float, r_s_fd: float):
    """Throughput density from caller-supplied per-mode secrecy rates."""
    if not 0.0 < sigma < 1.0:
        raise DomainError("sigma must lie in (0, 1)")
    if r_s_hd < 0 or r_s_fd < 0:
        raise DomainError("secrecy rates must be nonnegative")
    qa = _q_array(q, closed_zero=True)
    val = params.lambda_l * (1.0 - sigma) * (qa * r_s_fd + (1.0 - qa) * r_s_hd)
    return _maybe_scalar(val, q)


def _check_feasible_range(constraints: OutageConstraints, qa) -> None:
    if constraints.q_m is None or constraints.q_m >= 1.0:
        raise DomainError("no fraction q in (0, 1] yields a positive rate gap")
    if np.any(qa < constraints.q_m) or np.any(qa > 1.0):
        raise DomainError(f"q must lie in [{constraints.q_m}, 1]")


def nst_aux(params: NetworkParams, constraints: OutageConstraints, q):
    """Rate gap w(q) and its sign surrogate phi(q) on the feasible range.

    sign(w'(q)) = -sign(phi(q)); phi increases strictly, starts negative at
    q_m, so w is unimodal there.
    """
    qa = _q_array(q)
    _check_feasible_range(constraints, qa)
    _, _, w, _ = _w_terms(params, constraints, qa)
    half_alpha = params.alpha / 2.0
    s = params.rho**params.delta * qa
    phi = 1.0 - (1.0 + s + (1.0 + s) ** (1.0 + half_alpha) / _beta1(params, constraints)) / (
        s + s ** (1.0 + half_alpha) / _beta2(params, constraints)
    )
    return _maybe_scalar(w, q), _maybe_scalar(phi, q)


def nst_case_constants(params: NetworkParams, constraints: OutageConstraints) -> NstAux:
    """Thresholds of the throughput case analysis (beta1, beta2, X, Y)."""
    rnd = params.rho_neg_delta
    if math.isinf(rnd):
        x = 0.0
        y = 0.0
    else:
        half_alpha = params.alpha / 2.0
        x = constraints.sigma_o / (params.r_o**2 * (1.0 + rnd))
        y = (
            (params.kappa * params.lambda_l) ** -half_alpha
            * params.rho ** -(1.0 + params.delta)
            + (1.0 + rnd) * x**-half_alpha
        ) ** -params.delta
    return NstAux(
        beta1=_beta1(params, constraints),
        beta2=_beta2(params, constraints),
        x_thresh=x,
        y_thresh=y,
    )


def nsee(params: NetworkParams, constraints: OutageConstraints, q):
    """Secrecy energy efficiency: throughput density over area power draw."""
    qa = _q_array(q)
    omega = nst(params, constraints, qa)
    power = params.lambda_l * (params.p_t + params.p_c + qa * params.p_j)
    return _maybe_scalar(omega / power, q)


def nsee_constants(params: NetworkParams, constraints: OutageConstraints) -> NseeAux:
    """Boundary-test constant W = delta * w'(1) of the efficiency objective."""
    if params.rho == 0:
        raise DomainError("p_j must be positive for the efficiency case analysis")
    t1, t2, _, _ = _w_terms(params, constraints, np.asarray(1.0))
    rd = params.rho**params.delta
    w_cap = float(t2 / (1.0 + t2) - (t1 / (1.0 + t1)) * rd / (1.0 + rd))
    return NseeAux(w_cap=w_cap)


def nsee_aux(params: NetworkParams, constraints: OutageConstraints, q):
    """Efficiency shape J(q), its sign surrogate Q(q), and the constant W.

    J = w/(1 + rho_c*q); Q = w'(q)*(1+rho_c*q) - rho_c*w(q) carries the sign
    of J' and crosses zero at most once on the feasible range.
    """
    qa = _q_array(q)
    _check_feasible_range(constraints, qa)
    _, _, w, w_prime = _w_terms(params, constraints, qa)
    j = w / (1.0 + params.rho_c * qa)
    big_q = w_prime * (1.0 + params.rho_c * qa) - params.rho_c * w
    return (
        _maybe_scalar(j, q),
        _maybe_scalar(big_q, q),
        nsee_constants(params, constraints).w_cap,
    )
