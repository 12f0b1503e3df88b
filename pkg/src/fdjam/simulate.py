"""Monte Carlo ground truth: Poisson networks, Rayleigh fading, MMSE eavesdroppers.

Each trial draws one network realization plus fading inside a finite disk
window around the typical receiver at the origin. Trials are independent
and consume dedicated counter-based random streams (Philox, stream index =
trial index), so estimates are bit-identical for a given seed regardless of
how trials are partitioned across workers.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NumericalError
from .model import DuplexMode, NetworkParams

# Condition-number guard of the eavesdropper covariance solve: beyond this
# the solve is untrustworthy and the trial is conservatively counted as a
# secrecy outage.
COND_LIMIT = 1e12

_BLOCK = 4096  # trials per worker block; does not affect results


@dataclass(frozen=True)
class SimulationConfig:
    """Window, trial budget and typical-link mode of one estimation run."""

    window_radius: float
    trials: int
    seed: int
    mode: DuplexMode
    q: float

    def __post_init__(self) -> None:
        if not self.window_radius > 0:
            raise DomainError("window_radius must be positive")
        if self.trials < 1:
            raise DomainError("trials must be at least 1")
        if not 0.0 <= self.q <= 1.0:
            raise DomainError("q must lie in [0, 1]")


@dataclass(frozen=True)
class NetworkRealization:
    """One sampled network around the typical pair.

    Receivers are split by duplex mode after independent thinning; each
    transmitter sits exactly r_o from its receiver at an independent uniform
    angle. The typical receiver is at the origin with its transmitter at
    (r_o, 0); it is not part of the sampled point sets.
    """

    hd_receivers: np.ndarray
    hd_transmitters: np.ndarray
    fd_receivers: np.ndarray
    fd_transmitters: np.ndarray
    eavesdroppers: np.ndarray
    typical_transmitter: np.ndarray


@dataclass(frozen=True)
class OutageEstimate:
    """Binomial estimate of an outage probability.

    ill_conditioned counts trials conservatively classified as secrecy
    outage because an eavesdropper covariance solve tripped the condition
    guard (diagnostic only; included in p_hat).
    """

    p_hat: float
    std_err: float
    trials: int
    ill_conditioned: int = 0


def trial_rng(seed: int, index: int) -> np.random.Generator:
    """Dedicated random stream of one trial: Philox counter block = index."""
    return np.random.Generator(np.random.Philox(key=seed, counter=[0, 0, index, 0]))


class _StreamFactory:
    """Reuses one Philox bit generator across a block of trials.

    Resetting the counter state reproduces exactly the stream that
    trial_rng(seed, index) would create, without paying generator
    construction per trial.
    """

    def __init__(self, seed: int):
        self._bitgen = np.random.Philox(key=seed)
        self._state = self._bitgen.state

    def get(self, index: int) -> np.random.Generator:
        counter = self._state["state"]["counter"]
        counter[:] = 0
        counter[2] = index
        self._state["buffer_pos"] = 4
        self._bitgen.state = self._state
        return np.random.Generator(self._bitgen)


def _disk_points(rng: np.random.Generator, n: int, radius: float) -> np.ndarray:
    r = radius * np.sqrt(rng.random(n))
    ang = rng.random(n) * (2.0 * np.pi)
    return np.column_stack((r * np.cos(ang), r * np.sin(ang)))


def sample_network(
    params: NetworkParams, config: SimulationConfig, rng: np.random.Generator
) -> NetworkRealization:
    """Draw one Poisson network realization inside the window.

    Draw order is fixed: receiver count, receiver positions, thinning marks,
    transmitter angles, eavesdropper count, eavesdropper positions.
    """
    area = math.pi * config.window_radius**2
    n_rx = rng.poisson(params.lambda_l * area)
    rx = _disk_points(rng, n_rx, config.window_radius)
    fd_mask = rng.random(n_rx) < config.q
    tx_ang = rng.random(n_rx) * (2.0 * np.pi)
    tx = rx + params.r_o * np.column_stack((np.cos(tx_ang), np.sin(tx_ang)))
    n_ev = rng.poisson(params.lambda_e * area)
    eavesdroppers = _disk_points(rng, n_ev, config.window_radius)
    return NetworkRealization(
        hd_receivers=rx[~fd_mask],
        hd_transmitters=tx[~fd_mask],
        fd_receivers=rx[fd_mask],
        fd_transmitters=tx[fd_mask],
        eavesdroppers=eavesdroppers,
        typical_transmitter=np.array([params.r_o, 0.0]),
    )


def simulate_sir_typical(
    params: NetworkParams,
    realization: NetworkRealization,
    mode: DuplexMode,
    rng: np.random.Generator,
) -> float:
    """SIR of the typical link for one fading draw.

    Interference gathers every other transmitter, the jamming of every
    full-duplex receiver, and (in FD mode) the deterministic residual
    self-interference eta*p_j. Unit-mean exponential gains are drawn per
    link in fixed order: typical link, HD transmitters, FD transmitters,
    FD jammers. An empty denominator means unbounded SIR.
    """
    h0 = rng.exponential()
    signal = params.p_t * h0 * params.r_o**-params.alpha

    def power_sum(points: np.ndarray, tx_power: float) -> float:
        gains = rng.exponential(size=len(points))
        if len(points) == 0:
            return 0.0
        dist = np.hypot(points[:, 0], points[:, 1])
        return tx_power * float((gains * dist**-params.alpha).sum())

    interference = power_sum(realization.hd_transmitters, params.p_t)
    interference += power_sum(realization.fd_transmitters, params.p_t)
    interference += power_sum(realization.fd_receivers, params.p_j)
    interference += mode.indicator * params.eta * params.p_j
    if interference == 0.0:
        return math.inf
    return signal / interference


def _jammer_points(
    realization: NetworkRealization, mode: DuplexMode
) -> np.ndarray:
    """Jamming sources: the full-duplex receivers, plus the typical receiver
    (at the origin) last when it operates in FD mode."""
    if mode.indicator:
        return np.vstack([realization.fd_receivers, np.zeros((1, 2))])
    return realization.fd_receivers


def _mmse_sir_batch(
    g_sig: np.ndarray,
    g_jam: np.ndarray,
    weights: np.ndarray,
    sig_gain: np.ndarray,
) -> tuple[np.ndarray, np.ndarray]:
    """Output SIR of MMSE receivers against colored jamming.

    g_sig: (e, n) signal channel vectors, g_jam: (e, j, n) jammer channel
    vectors, weights: (e, j) received jammer powers, sig_gain: (e,) received
    signal path gains. Returns (sir, ill_conditioned_mask); SIR is +inf
    where the covariance condition number exceeds the guard.
    """
    cov = np.einsum("ej,ejn,ejm->enm", weights, g_jam, g_jam.conj())
    finite = np.isfinite(cov).all(axis=(1, 2))
    eigs = np.linalg.eigvalsh(np.where(finite[:, None, None], cov, np.eye(cov.shape[-1])))
    with np.errstate(divide="ignore", invalid="ignore"):
        bad = ~finite | (eigs[:, 0] <= 0.0) | (eigs[:, -1] > COND_LIMIT * eigs[:, 0])
    sir = np.full(len(g_sig), np.inf)
    ok = ~bad
    if ok.any():
        try:
            sol = np.linalg.solve(cov[ok], g_sig[ok][..., None])[..., 0]
        except np.linalg.LinAlgError as exc:  # guard should have caught this
            raise NumericalError("covariance solve failed on full-rank input") from exc
        quad = np.einsum("en,en->e", g_sig[ok].conj(), sol).real
        sir[ok] = quad * sig_gain[ok]
    return sir, bad


def _complex_gaussians(rng: np.random.Generator, shape: tuple) -> np.ndarray:
    z = rng.standard_normal(shape + (2,))
    return (z[..., 0] + 1j * z[..., 1]) / math.sqrt(2.0)


def simulate_eavesdropper_sir(
    params: NetworkParams,
    realization: NetworkRealization,
    mode: DuplexMode,
    eavesdropper: np.ndarray,
    rng: np.random.Generator,
) -> float:
    """Post-combining SIR of one MMSE eavesdropper.

    The eavesdropper cancels every undesired information signal, so only
    jamming colors its covariance. Fewer jamming sources than antennas
    leaves the covariance singular: the eavesdropper nulls all jammers and
    the noise-free SIR is +inf (guaranteed secrecy outage). Channel vectors
    are drawn in fixed order: signal vector first, then one per jamming
    source.
    """
    eav = np.asarray(eavesdropper, dtype=float)
    jammers = _jammer_points(realization, mode)
    n_jam = len(jammers)
    g_sig = _complex_gaussians(rng, (1, params.n_e))
    if n_jam < params.n_e:
        return math.inf
    g_jam = _complex_gaussians(rng, (1, n_jam, params.n_e))
    d_jam = np.hypot(jammers[:, 0] - eav[0], jammers[:, 1] - eav[1])
    weights = (params.p_j * d_jam**-params.alpha)[None, :]
    d_sig = math.hypot(
        eav[0] - realization.typical_transmitter[0],
        eav[1] - realization.typical_transmitter[1],
    )
    sig_gain = np.array([params.p_t * d_sig**-params.alpha])
    sir, _ = _mmse_sir_batch(g_sig, g_jam, weights, sig_gain)
    return float(sir[0])


def _pco_block(
    params: NetworkParams,
    config: SimulationConfig,
    tau_t: float,
    start: int,
    stop: int,
) -> int:
    streams = _StreamFactory(config.seed)
    outages = 0
    for i in range(start, stop):
        rng = streams.get(i)
        realization = sample_network(params, config, rng)
        sir = simulate_sir_typical(params, realization, config.mode, rng)
        outages += sir < tau_t
    return outages


def _pso_block(
    params: NetworkParams,
    config: SimulationConfig,
    tau_e: float,
    start: int,
    stop: int,
) -> tuple[int, int]:
    streams = _StreamFactory(config.seed)
    outages = 0
    ill_conditioned = 0
    fd = config.mode.indicator
    for i in range(start, stop):
        rng = streams.get(i)
        realization = sample_network(params, config, rng)
        eav = realization.eavesdroppers
        n_ev = len(eav)
        if n_ev == 0:
            continue
        n_jam = len(realization.fd_receivers) + fd
        if n_jam < params.n_e:
            outages += 1
            continue
        g_sig = _complex_gaussians(rng, (n_ev, params.n_e))
        g_jam = _complex_gaussians(rng, (n_ev, n_jam, params.n_e))
        jammers = _jammer_points(realization, config.mode)
        d_jam = np.hypot(
            jammers[None, :, 0] - eav[:, None, 0], jammers[None, :, 1] - eav[:, None, 1]
        )
        weights = params.p_j * d_jam**-params.alpha
        d_sig = np.hypot(eav[:, 0] - params.r_o, eav[:, 1])
        sig_gain = params.p_t * d_sig**-params.alpha
        sir, bad = _mmse_sir_batch(g_sig, g_jam, weights, sig_gain)
        ill_conditioned += bool(bad.any())
        if (sir >= tau_e).any():
            outages += 1
    return outages, ill_conditioned


def _run_blocks(block_fn, args: tuple, trials: int, workers: int) -> list:
    blocks = [
        (start, min(start + _BLOCK, trials)) for start in range(0, trials, _BLOCK)
    ]
    if workers <= 1 or len(blocks) == 1:
        return [block_fn(*args, start, stop) for start, stop in blocks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(block_fn, *args, start, stop) for start, stop in blocks]
        return [f.result() for f in futures]


def _binomial_estimate(count: int, trials: int, ill: int = 0) -> OutageEstimate:
    p_hat = count / trials
    return OutageEstimate(
        p_hat=p_hat,
        std_err=math.sqrt(p_hat * (1.0 - p_hat) / trials),
        trials=trials,
        ill_conditioned=ill,
    )


def _validate_window(params: NetworkParams, config: SimulationConfig) -> None:
    if config.window_radius < 20.0 * params.r_o:
        raise DomainError("window_radius must be at least 20 * r_o")


def estimate_pco(
    params: NetworkParams,
    config: SimulationConfig,
    tau_t: float,
    workers: int = 1,
) -> OutageEstimate:
    """Empirical connection outage probability of the typical link."""
    _validate_window(params, config)
    if tau_t < 0:
        raise DomainError("tau_t must be nonnegative")
    counts = _run_blocks(_pco_block, (params, config, tau_t), config.trials, workers)
    return _binomial_estimate(sum(counts), config.trials)


def estimate_pso(
    params: NetworkParams,
    config: SimulationConfig,
    tau_e: float,
    workers: int = 1,
) -> OutageEstimate:
    """Empirical secrecy outage probability of the typical link.

    A realization is an outage when any eavesdropper reaches the secrecy
    threshold; eavesdroppers share the sampled network but draw independent
    channel vectors.
    """
    _validate_window(params, config)
    if not tau_e > 0:
        raise DomainError("tau_e must be positive")
    results = _run_blocks(_pso_block, (params, config, tau_e), config.trials, workers)
    outages = sum(r[0] for r in results)
    ill = sum(r[1] for r in results)
    return _binomial_estimate(outages, config.trials, ill)
