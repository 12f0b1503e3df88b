"""Connection and secrecy outage probabilities of a typical link.

Closed forms where they exist; adaptive quadrature for the two expressions
that need it (the full-duplex pair interference transform inside the exact
connection outage, and the per-antenna sums inside the secrecy outage upper
bound). All outputs are probabilities built from exponentials of negative
reals, so they land in [0, 1] without clamping.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate, special

from .errors import DomainError, QuadratureError
from .model import DuplexMode, NetworkParams


@dataclass(frozen=True)
class QuadratureSpec:
    """Accuracy/budget knobs for the 2-D integrations.

    rel_tol: target relative error of the outer adaptive integral; the inner
    angular integral is driven one order tighter.
    max_panels: subinterval budget of the outer integral.
    tail_cut: truncation point of the exponentially weighted radial integral
    in the secrecy bound, extended by 10 per polynomial order so the
    discarded gamma-tail mass stays below 1e-14.
    """

    rel_tol: float = 1e-8
    max_panels: int = 4096
    tail_cut: float = 40.0

    def __post_init__(self) -> None:
        if not self.rel_tol > 0:
            raise DomainError("rel_tol must be positive")
        if self.max_panels < 16:
            raise DomainError("max_panels must be at least 16")
        if not self.tail_cut > 0:
            raise DomainError("tail_cut must be positive")


DEFAULT_QUAD = QuadratureSpec()

_TWO_PI = 2.0 * math.pi


def _check_fraction(q: float) -> None:
    if not 0.0 <= q <= 1.0:
        raise DomainError("q must lie in [0, 1]")


def _periodic_integral(f, rel_tol: float, n0: int = 64, n_max: int = 16384) -> float:
    """Integrate a 2*pi-periodic function over one period.

    Uniform sampling is spectrally accurate for smooth periodic integrands;
    the node count doubles (new nodes interleaving old ones) until two
    successive estimates agree.
    """
    n = n0
    theta = np.arange(n) * (_TWO_PI / n)
    val = float(f(theta).mean()) * _TWO_PI
    delta = math.inf
    while n < n_max:
        mids = (np.arange(n) + 0.5) * (_TWO_PI / n)
        refined = 0.5 * (val + float(f(mids).mean()) * _TWO_PI)
        delta = abs(refined - val)
        val = refined
        if delta <= rel_tol * max(abs(val), 1e-12):
            return val
        n *= 2
    # Bounded integrands (|f| <= 1 here): fall back on an absolute check
    # before declaring failure, so unresolved measure-zero spikes do not
    # abort the whole computation.
    if delta > 1e-4 * max(abs(val), 1.0):
        raise QuadratureError("angular integral did not converge")
    return val


def _outer_quad(f, lo: float, hi: float, quad: QuadratureSpec) -> float:
    res = integrate.quad(
        f, lo, hi, epsabs=1e-13, epsrel=quad.rel_tol, limit=quad.max_panels,
        full_output=1,
    )
    if len(res) > 3:
        raise QuadratureError(f"outer integral did not converge: {res[3]}")
    return res[0]


def _fd_pair_exposure(params: NetworkParams, tau_t: float, quad: QuadratureSpec) -> float:
    """Radial-angular integral of the full-duplex pair interference transform.

    Each pair contributes a transmitter term at the displaced distance and a
    jamming term at the receiver distance; the angular law couples the two.
    The outer semi-infinite range is mapped to [0, 1) via v = r_o*t/(1-t).
    """
    alpha = params.alpha
    r_o = params.r_o
    a = r_o**alpha * tau_t                # transmitter term coefficient
    b = params.rho * r_o**alpha * tau_t   # jamming term coefficient

    def g_of_v(v: float) -> float:
        if v == 0.0:
            t_b = 0.0 if b > 0 else 1.0
            t_a = r_o**alpha / (r_o**alpha + a)
            return _TWO_PI * (1.0 - t_a * t_b)
        v_a = v**alpha

        def f(theta: np.ndarray) -> np.ndarray:
            # clamp: the squared displaced distance can round negative at
            # v == r_o, theta == 0, and a fractional power would yield nan
            vt2 = np.maximum(v * v + r_o * r_o - 2.0 * v * r_o * np.cos(theta), 0.0)
            vt_a = vt2 ** (alpha / 2.0)
            # 1 - 1/((1 + a/vt_a)(1 + b/v_a)) without cancellation
            return (a * v_a + b * vt_a + a * b) / ((vt_a + a) * (v_a + b))

        return _periodic_integral(f, quad.rel_tol * 0.1)

    def outer(t: float) -> float:
        v = r_o * t / (1.0 - t)
        jac = r_o / (1.0 - t) ** 2
        return g_of_v(v) * v * jac

    return _outer_quad(outer, 0.0, 1.0, quad)


def pco_exact(
    params: NetworkParams,
    mode: DuplexMode,
    q: float,
    tau_t: float,
    quad: QuadratureSpec = DEFAULT_QUAD,
) -> float:
    """Exact connection outage probability of a typical link.

    Product of three exponential factors: residual self-interference (FD
    only), half-duplex transmitter interference, and the full-duplex pair
    interference transform evaluated by 2-D quadrature.
    """
    _check_fraction(q)
    if tau_t < 0:
        raise DomainError("tau_t must be nonnegative")
    if tau_t == 0.0:
        return 0.0
    si = mode.indicator * params.rho * params.eta * params.r_o**params.alpha * tau_t
    hd = params.kappa * (1.0 - q) * params.lambda_l * params.r_o**2 * tau_t**params.delta
    fd = q * params.lambda_l * _fd_pair_exposure(params, tau_t, quad) if q > 0 else 0.0
    return -math.expm1(-(si + hd + fd))


def pco_bounds(
    params: NetworkParams, mode: DuplexMode, q: float, tau_t: float
) -> tuple[float, float]:
    """Closed-form (upper, lower) bounds on the connection outage probability.

    The upper bound treats the pair's two interference sources as if their
    exposure factors simply added (1 + rho**delta * q); the lower bound uses
    the tighter bracket (1 + q*((1+delta)*rho**delta - (1-delta))/2).
    """
    _check_fraction(q)
    if tau_t < 0:
        raise DomainError("tau_t must be nonnegative")
    si = mode.indicator * params.rho * params.eta * params.r_o**params.alpha * tau_t
    base = params.kappa * params.r_o**2 * tau_t**params.delta * params.lambda_l
    rd = params.rho**params.delta
    upper = -math.expm1(-(si + base * (1.0 + rd * q)))
    lower = -math.expm1(
        -(si + base * (1.0 + q * ((1.0 + params.delta) * rd - (1.0 - params.delta)) / 2.0))
    )
    return upper, lower


def _jam_field_scale(params: NetworkParams, q: float, tau_e: float) -> float:
    """kappa * lambda_fd * rho**delta * tau_e**delta, the jamming field scale."""
    return (
        params.kappa
        * q
        * params.lambda_l
        * params.rho**params.delta
        * tau_e**params.delta
    )


def pso_upper(
    params: NetworkParams,
    mode: DuplexMode,
    q: float,
    tau_e: float,
    quad: QuadratureSpec = DEFAULT_QUAD,
) -> float:
    """Upper bound on the secrecy outage probability of a typical link.

    Double sum over antenna orders with a 2-D integral per order, collapsed
    into a single exponentially weighted radial integral: the factorial sums
    become regularized incomplete-gamma weights (log-space safe for large
    antenna counts), and the angular factor of the typical receiver's own
    jamming enters through one profile integrated per radial node. Without
    any jamming field (q = 0 or rho = 0) the eavesdropper SIR is unbounded
    and the outage probability is exactly 1.
    """
    _check_fraction(q)
    if not tau_e > 0:
        raise DomainError("tau_e must be positive")
    if params.lambda_e == 0:
        return 0.0
    c = _jam_field_scale(params, q, tau_e)
    if c == 0.0:
        return 1.0
    alpha = params.alpha
    r_o = params.r_o
    n_e = params.n_e
    rte = params.rho * tau_e
    ind = mode.indicator
    u_max = quad.tail_cut + 10.0 * (n_e - 1)

    def theta0(v: float) -> float:
        # angular integral of 1/(1 + ind*rho*tau_e*(v/v_tilde)**alpha)
        if ind == 0 or v == 0.0:
            return _TWO_PI

        def f(theta: np.ndarray) -> np.ndarray:
            vt2 = np.maximum(v * v + r_o * r_o - 2.0 * v * r_o * np.cos(theta), 0.0)
            with np.errstate(divide="ignore"):
                x = rte * (v * v / vt2) ** (alpha / 2.0)
            return 1.0 / (1.0 + x)

        return _periodic_integral(f, quad.rel_tol * 0.1)

    def integrand(u: float) -> float:
        th0 = theta0(math.sqrt(u / c))
        val = special.gammaincc(n_e, u) * th0
        if n_e >= 2 and ind:
            val += special.gammaincc(n_e - 1, u) * (_TWO_PI - th0)
        return val

    exposure = params.lambda_e / (2.0 * c) * _outer_quad(integrand, 0.0, u_max, quad)
    return -math.expm1(-exposure)


def pso_hd_closed(params: NetworkParams, q: float, tau_e: float) -> float:
    """Closed-form secrecy outage probability of a half-duplex link.

    Exact collapse of the upper-bound integral when the typical receiver
    does not jam. Returns 1 when there is no jamming field at all (q = 0 or
    rho = 0) while eavesdroppers are present.
    """
    _check_fraction(q)
    if not tau_e > 0:
        raise DomainError("tau_e must be positive")
    if params.lambda_e == 0:
        return 0.0
    c = _jam_field_scale(params, q, tau_e)
    if c == 0.0:
        return 1.0
    return -math.expm1(-math.pi * params.lambda_e * params.n_e / c)


def pso_fd_approx(params: NetworkParams, q: float, tau_e: float) -> float:
    """Small-link-distance approximation of the full-duplex secrecy outage.

    Multiplies the half-duplex exponent by 1 - (rho*tau_e/n_e)/(1+rho*tau_e),
    the r_o -> 0 limit of the typical receiver's own jamming contribution;
    always at or below the half-duplex closed form.
    """
    _check_fraction(q)
    if not tau_e > 0:
        raise DomainError("tau_e must be positive")
    if params.lambda_e == 0:
        return 0.0
    c = _jam_field_scale(params, q, tau_e)
    if c == 0.0:
        return 1.0
    rte = params.rho * tau_e
    factor = 1.0 - (rte / params.n_e) / (1.0 + rte)
    return -math.expm1(-math.pi * params.lambda_e * params.n_e / c * factor)


def pso_large_ne(params: NetworkParams, q: float, tau_e: float) -> float:
    """Secrecy outage in the many-antenna limit, valid for both modes.

    Identical formula to the half-duplex closed form; kept as its own entry
    point because the network-wide metrics use it for full-duplex links too.
    """
    return pso_hd_closed(params, q, tau_e)
