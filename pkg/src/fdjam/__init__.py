"""Physical-layer security analysis of ad hoc networks with a tunable
fraction of full-duplex jamming receivers.

Layers: `model` (domain types and derived constants), `outage` (closed-form
and quadrature outage probabilities), `metrics` (network-wide objectives),
`optimize` (case logic and bisection for the optimal fraction), `simulate`
(Monte Carlo ground truth), `cli` (configuration-driven runs and sweeps).
"""

from .errors import (
    BracketError,
    ConfigError,
    ConvergenceError,
    DomainError,
    NumericalError,
    QuadratureError,
)
from .model import (
    CaseTag,
    DuplexMode,
    NetworkParams,
    OptimizationResult,
    OutageConstraints,
    RateThresholds,
    build_outage_constraints,
)
from .outage import (
    QuadratureSpec,
    pco_bounds,
    pco_exact,
    pso_fd_approx,
    pso_hd_closed,
    pso_large_ne,
    pso_upper,
)
from .metrics import (
    AslnAux,
    NseeAux,
    NstAux,
    asln,
    asln_aux,
    asln_coefficients,
    asln_general,
    nsee,
    nsee_aux,
    nsee_constants,
    nst,
    nst_aux,
    nst_case_constants,
    nst_general,
    nst_thresholds,
)
from .optimize import (
    asln_q_closed_sic,
    bisect,
    grid_oracle,
    nst_q_dense_limit,
    optimize_asln,
    optimize_nsee,
    optimize_nsee_constrained,
    optimize_nst,
)
from .simulate import (
    NetworkRealization,
    OutageEstimate,
    SimulationConfig,
    estimate_pco,
    estimate_pso,
    sample_network,
    simulate_eavesdropper_sir,
    simulate_sir_typical,
    trial_rng,
)

__version__ = "0.1.0"

__all__ = [
    "AslnAux",
    "BracketError",
    "CaseTag",
    "ConfigError",
    "ConvergenceError",
    "DomainError",
    "DuplexMode",
    "NetworkParams",
    "NetworkRealization",
    "NseeAux",
    "NstAux",
    "NumericalError",
    "OptimizationResult",
    "OutageConstraints",
    "OutageEstimate",
    "QuadratureError",
    "QuadratureSpec",
    "RateThresholds",
    "SimulationConfig",
    "asln",
    "asln_aux",
    "asln_coefficients",
    "asln_general",
    "asln_q_closed_sic",
    "bisect",
    "build_outage_constraints",
    "estimate_pco",
    "estimate_pso",
    "grid_oracle",
    "nsee",
    "nsee_aux",
    "nsee_constants",
    "nst",
    "nst_aux",
    "nst_case_constants",
    "nst_general",
    "nst_q_dense_limit",
    "nst_thresholds",
    "optimize_asln",
    "optimize_nsee",
    "optimize_nsee_constrained",
    "optimize_nst",
    "pco_bounds",
    "pco_exact",
    "pso_fd_approx",
    "pso_hd_closed",
    "pso_large_ne",
    "pso_upper",
    "sample_network",
    "simulate_eavesdropper_sir",
    "simulate_sir_typical",
    "trial_rng",
]
