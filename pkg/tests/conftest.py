"""Shared fixtures and randomized-instance samplers.

Randomized suites draw every instance from a dedicated seeded stream, so
runs are deterministic and parallelizable.
"""

from __future__ import annotations

import numpy as np
import pytest

from fdjam import NetworkParams, build_outage_constraints


def fig1_params(eta: float = 0.1) -> NetworkParams:
    return NetworkParams(
        alpha=4.0, lambda_l=3e-3, lambda_e=0.0, n_e=1, r_o=1.0,
        p_t=1.0, p_j=1.0, eta=eta,
    )


def instance_rng(master_seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(master_seed, spawn_key=(index,)))


def random_params(rng: np.random.Generator, eta_zero: bool = False) -> NetworkParams:
    """Generic network draw over moderate, physically plausible ranges."""
    return NetworkParams(
        alpha=float(rng.uniform(2.5, 5.0)),
        lambda_l=float(10.0 ** rng.uniform(-4.0, -1.5)),
        lambda_e=float(10.0 ** rng.uniform(-5.0, -2.5)),
        n_e=int(rng.integers(1, 9)),
        r_o=float(rng.uniform(0.25, 2.0)),
        p_t=1.0,
        p_j=float(10.0 ** rng.uniform(-0.6, 1.3)),
        eta=0.0 if eta_zero else float(10.0 ** rng.uniform(-3.0, -0.3)),
        p_c=float(rng.uniform(0.0, 2.0)),
    )


def random_asln_instance(rng: np.random.Generator):
    """(params, tau_t, tau_e): any draw is valid (boundary or interior)."""
    params = random_params(rng)
    tau_t = float(rng.uniform(0.5, 4.0))
    tau_e = float(rng.uniform(0.2, tau_t))
    return params, tau_t, tau_e


def random_feasible_constraints(rng: np.random.Generator, max_draws: int = 200):
    """(params, constraints) with a nonempty feasible range q in (q_m, 1)."""
    for _ in range(max_draws):
        params = random_params(rng, eta_zero=True)
        sigma = float(rng.uniform(0.1, 0.6))
        epsilon = float(rng.uniform(0.01, 0.2))
        cons = build_outage_constraints(params, sigma, epsilon)
        if cons.feasible and cons.q_m is not None and cons.q_m < 0.95:
            return params, cons
    raise AssertionError("no feasible instance found; widen sampler ranges")


@pytest.fixture
def rng():
    return np.random.default_rng(321)
