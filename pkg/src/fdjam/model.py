"""Domain types and derived constants shared by every other module.

All quantities are in normalized units: densities per unit area, distances in
the same length unit, powers in a common power unit. Everything is plain
float arithmetic; types are immutable after construction and safe to share
across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

from .errors import DomainError


class DuplexMode(Enum):
    """Operating mode of the typical receiver."""

    HD = "hd"
    FD = "fd"

    @property
    def indicator(self) -> int:
        """1 for FD, 0 for HD (multiplies the self-interference terms)."""
        return 1 if self is DuplexMode.FD else 0


class CaseTag(Enum):
    """Which branch of the optimal-fraction case analysis produced a result."""

    INFEASIBLE = "infeasible"
    BOUNDARY_ONE = "boundary_one"
    INTERIOR_ROOT = "interior_root"
    CONSTRAINED_ROOT = "constrained_root"


@dataclass(frozen=True)
class NetworkParams:
    """Physical and geometric constants of the network plus derived quantities.

    alpha: path-loss exponent, must exceed 2
    lambda_l: legitimate-receiver density (> 0)
    lambda_e: eavesdropper density (>= 0)
    n_e: eavesdropper antenna count (>= 1)
    r_o: legitimate link distance (> 0)
    p_t: legitimate transmit power (> 0)
    p_j: jamming power of a full-duplex receiver (>= 0)
    eta: residual self-interference coefficient, 0 (perfect cancellation) to 1
    p_c: circuit power, enters only the energy-efficiency metric

    Derived: delta = 2/alpha, kappa = pi*Gamma(1+delta)*Gamma(1-delta),
    rho = p_j/p_t, rho_c = p_j/(p_t+p_c).
    """

    alpha: float
    lambda_l: float
    lambda_e: float
    n_e: int
    r_o: float
    p_t: float
    p_j: float
    eta: float
    p_c: float = 0.0
    delta: float = field(init=False)
    kappa: float = field(init=False)
    rho: float = field(init=False)
    rho_c: float = field(init=False)

    def __post_init__(self) -> None:
        if not self.alpha > 2:
            raise DomainError("alpha must exceed 2")
        if not self.lambda_l > 0:
            raise DomainError("lambda_l must be positive")
        if self.lambda_e < 0:
            raise DomainError("lambda_e must be nonnegative")
        if int(self.n_e) != self.n_e or self.n_e < 1:
            raise DomainError("n_e must be a positive integer")
        if not self.r_o > 0:
            raise DomainError("r_o must be positive")
        if not self.p_t > 0:
            raise DomainError("p_t must be positive")
        if self.p_j < 0:
            raise DomainError("p_j must be nonnegative")
        if not 0.0 <= self.eta <= 1.0:
            raise DomainError("eta must lie in [0, 1]")
        if self.p_c < 0:
            raise DomainError("p_c must be nonnegative")
        object.__setattr__(self, "n_e", int(self.n_e))
        delta = 2.0 / self.alpha
        object.__setattr__(self, "delta", delta)
        object.__setattr__(
            self, "kappa", math.pi * math.gamma(1.0 + delta) * math.gamma(1.0 - delta)
        )
        object.__setattr__(self, "rho", self.p_j / self.p_t)
        object.__setattr__(self, "rho_c", self.p_j / (self.p_t + self.p_c))

    @property
    def rho_neg_delta(self) -> float:
        """rho**(-delta), +inf when no jamming power is available."""
        return self.rho ** -self.delta if self.rho > 0 else math.inf


@dataclass(frozen=True)
class RateThresholds:
    """Wiretap-code rates and the SIR thresholds they induce.

    r_t: codeword rate, r_s: secrecy rate (bits per channel use); the
    redundancy r_e = r_t - r_s buys secrecy. tau_t = 2**r_t - 1 and
    tau_e = 2**r_e - 1 are the connection and secrecy SIR thresholds.
    """

    r_t: float
    r_s: float
    r_e: float = field(init=False)
    tau_t: float = field(init=False)
    tau_e: float = field(init=False)

    def __post_init__(self) -> None:
        if not self.r_t > 0:
            raise DomainError("r_t must be positive")
        if not 0.0 <= self.r_s <= self.r_t:
            raise DomainError("r_s must lie in [0, r_t]")
        r_e = self.r_t - self.r_s
        object.__setattr__(self, "r_e", r_e)
        object.__setattr__(self, "tau_t", math.expm1(self.r_t * math.log(2.0)))
        object.__setattr__(self, "tau_e", math.expm1(r_e * math.log(2.0)))

    @classmethod
    def from_sir_thresholds(cls, tau_t: float, tau_e: float) -> "RateThresholds":
        """Build from SIR thresholds instead of rates (tau_t >= tau_e >= 0)."""
        if not tau_t > 0:
            raise DomainError("tau_t must be positive")
        if not 0.0 <= tau_e <= tau_t:
            raise DomainError("tau_e must lie in [0, tau_t]")
        ln2 = math.log(2.0)
        r_t = math.log1p(tau_t) / ln2
        r_e = math.log1p(tau_e) / ln2
        return cls(r_t=r_t, r_s=r_t - r_e)


@dataclass(frozen=True)
class OutageConstraints:
    """Connection/secrecy outage targets and the induced feasibility data.

    sigma_o = ln(1/(1-sigma)) and epsilon_o = ln(1/(1-epsilon)) are the
    exponent budgets the two outage targets allow. delta_cap compares that
    budget against the eavesdropper pressure pi*lambda_e*n_e*r_o**2; a
    positive secrecy rate requires the jammer fraction to exceed q_m, which
    exists in (0, 1) iff delta_cap > 1 + rho**(-delta) (the `feasible` flag).
    Infeasibility is data, not an error: the optimizers enumerate it as a
    legitimate case.
    """

    sigma: float
    epsilon: float
    sigma_o: float
    epsilon_o: float
    delta_cap: float
    q_m: float | None
    feasible: bool


def build_outage_constraints(
    params: NetworkParams, sigma: float, epsilon: float
) -> OutageConstraints:
    """Derive the outage-constraint data for the given targets."""
    if not 0.0 < sigma < 1.0:
        raise DomainError("sigma must lie in (0, 1)")
    if not 0.0 < epsilon < 1.0:
        raise DomainError("epsilon must lie in (0, 1)")
    if not params.lambda_e > 0:
        raise DomainError("lambda_e must be positive to constrain secrecy outage")
    sigma_o = -math.log1p(-sigma)
    epsilon_o = -math.log1p(-epsilon)
    delta_cap = sigma_o * epsilon_o / (
        math.pi * params.lambda_e * params.n_e * params.r_o**2
    )
    rnd = params.rho_neg_delta
    q_m = rnd / (delta_cap - 1.0) if delta_cap > 1.0 else None
    return OutageConstraints(
        sigma=sigma,
        epsilon=epsilon,
        sigma_o=sigma_o,
        epsilon_o=epsilon_o,
        delta_cap=delta_cap,
        q_m=q_m,
        feasible=delta_cap > 1.0 + rnd,
    )


@dataclass(frozen=True)
class OptimizationResult:
    """Outcome of an optimal-fraction search.

    q_star is None exactly when the case is INFEASIBLE; residual is the
    absolute value of the defining root equation at q_star (0 for boundary
    and infeasible cases).
    """

    q_star: float | None
    objective: float
    case_tag: CaseTag
    residual: float
