"""Monte Carlo machinery: sampling laws, MMSE solves, reproducibility."""

import math

import numpy as np
import pytest
from scipy import stats

from fdjam import (
    DomainError,
    DuplexMode,
    NetworkParams,
    SimulationConfig,
    estimate_pco,
    estimate_pso,
    pco_exact,
    pso_hd_closed,
    sample_network,
    simulate_eavesdropper_sir,
    simulate_sir_typical,
    trial_rng,
)
from fdjam.simulate import _StreamFactory, _mmse_sir_batch
from conftest import fig1_params

HD = DuplexMode.HD
FD = DuplexMode.FD


def _config(**overrides) -> SimulationConfig:
    base = dict(window_radius=100.0, trials=100, seed=7, mode=FD, q=0.5)
    base.update(overrides)
    return SimulationConfig(**base)


def _pso_params(lam_fd=1e-3, r_o=0.5, lam_e=1e-3, n_e=2) -> NetworkParams:
    return NetworkParams(
        alpha=4.0, lambda_l=lam_fd, lambda_e=lam_e, n_e=n_e, r_o=r_o,
        p_t=1.0, p_j=10.0, eta=0.0,
    )


class TestStreams:
    def test_factory_matches_public_streams(self):
        factory = _StreamFactory(123)
        for index in (0, 1, 17, 2**40):
            a = factory.get(index).random(8)
            b = trial_rng(123, index).random(8)
            assert np.array_equal(a, b)

    def test_streams_differ_across_trials(self):
        assert not np.array_equal(trial_rng(1, 0).random(4), trial_rng(1, 1).random(4))


class TestSampleNetwork:
    def test_poisson_counts_chi_square(self):
        params = fig1_params()
        config = _config(trials=1)
        mean = params.lambda_l * math.pi * config.window_radius**2
        counts = np.array([
            len(sample_network(params, config, trial_rng(5, i)).hd_receivers)
            + len(sample_network(params, config, trial_rng(5, i)).fd_receivers)
            for i in range(0, 20000, 2)
        ])
        # bin the Poisson law, merging tails so expected counts stay above 5
        lo, hi = int(mean - 4 * math.sqrt(mean)), int(mean + 4 * math.sqrt(mean))
        edges = list(range(lo, hi + 1))
        observed = np.array(
            [(counts <= lo).sum()]
            + [(counts == k).sum() for k in edges[1:-1]]
            + [(counts >= hi).sum()]
        )
        pmf = stats.poisson(mean)
        expected = np.array(
            [pmf.cdf(lo)]
            + [pmf.pmf(k) for k in edges[1:-1]]
            + [1.0 - pmf.cdf(hi - 1)]
        ) * len(counts)
        result = stats.chisquare(observed, expected, ddof=0, sum_check=False)
        assert result.pvalue > 0.01

    def test_thinning_extremes(self):
        params = fig1_params()
        all_fd = sample_network(params, _config(q=1.0), trial_rng(3, 0))
        assert len(all_fd.hd_receivers) == 0
        assert len(all_fd.fd_receivers) > 0
        all_hd = sample_network(params, _config(q=0.0), trial_rng(3, 0))
        assert len(all_hd.fd_receivers) == 0

    def test_pair_separation_is_link_distance(self):
        params = fig1_params()
        real = sample_network(params, _config(), trial_rng(9, 4))
        for rx, tx in ((real.hd_receivers, real.hd_transmitters),
                       (real.fd_receivers, real.fd_transmitters)):
            gaps = np.hypot(*(tx - rx).T)
            assert np.allclose(gaps, params.r_o, rtol=1e-12)
        assert np.allclose(real.typical_transmitter, [params.r_o, 0.0])

    def test_same_stream_reproduces(self):
        params = fig1_params()
        a = sample_network(params, _config(), trial_rng(11, 2))
        b = sample_network(params, _config(), trial_rng(11, 2))
        assert np.array_equal(a.fd_receivers, b.fd_receivers)
        assert np.array_equal(a.eavesdroppers, b.eavesdroppers)


class TestTypicalSir:
    def test_empty_network_hd_unbounded(self):
        params = fig1_params(eta=0.0)
        config = _config(window_radius=21.0)
        sparse = NetworkParams(
            alpha=4.0, lambda_l=1e-12, lambda_e=0.0, n_e=1, r_o=1.0,
            p_t=1.0, p_j=1.0, eta=0.0,
        )
        real = sample_network(sparse, config, trial_rng(1, 0))
        assert len(real.hd_receivers) + len(real.fd_receivers) == 0
        assert simulate_sir_typical(sparse, real, HD, trial_rng(1, 0)) == math.inf

    def test_empty_network_fd_limited_by_self_interference(self):
        sparse = NetworkParams(
            alpha=4.0, lambda_l=1e-12, lambda_e=0.0, n_e=1, r_o=1.0,
            p_t=1.0, p_j=2.0, eta=0.25,
        )
        real = sample_network(sparse, _config(window_radius=21.0), trial_rng(1, 0))
        rng = trial_rng(42, 7)
        sir = simulate_sir_typical(sparse, real, FD, rng)
        h0 = trial_rng(42, 7).exponential()
        assert sir == pytest.approx(h0 * 1.0 / (0.25 * 2.0), rel=1e-12)

    def test_fading_replay_reconstructs_sir(self):
        params = fig1_params(eta=0.1)
        real = sample_network(params, _config(), trial_rng(2, 5))
        sir = simulate_sir_typical(params, real, FD, trial_rng(6, 0))
        rng = trial_rng(6, 0)
        h0 = rng.exponential()
        total = 0.0
        for points, power in (
            (real.hd_transmitters, params.p_t),
            (real.fd_transmitters, params.p_t),
            (real.fd_receivers, params.p_j),
        ):
            gains = rng.exponential(size=len(points))
            dist = np.hypot(points[:, 0], points[:, 1])
            total += power * float((gains * dist**-params.alpha).sum())
        total += params.eta * params.p_j
        assert sir == pytest.approx(params.p_t * h0 / total, rel=1e-12)


class TestEavesdropperSir:
    def test_single_antenna_matches_scalar_path(self):
        params = _pso_params(n_e=1)
        real = sample_network(params, _config(q=1.0, window_radius=60.0), trial_rng(4, 1))
        assert len(real.fd_receivers) >= 1
        eav = np.array([3.0, -2.0])
        sir = simulate_eavesdropper_sir(params, real, FD, eav, trial_rng(8, 0))
        # replay the draws: signal vector first, then one per jamming source
        rng = trial_rng(8, 0)
        z = rng.standard_normal((1, 1, 2))
        g_sig = (z[..., 0] + 1j * z[..., 1]) / math.sqrt(2.0)
        jam = np.vstack([real.fd_receivers, [[0.0, 0.0]]])
        z = rng.standard_normal((1, len(jam), 1, 2))
        g_jam = (z[..., 0] + 1j * z[..., 1]) / math.sqrt(2.0)
        d_jam = np.hypot(jam[:, 0] - eav[0], jam[:, 1] - eav[1])
        denom = float(
            (params.p_j * d_jam**-params.alpha * np.abs(g_jam[0, :, 0]) ** 2).sum()
        )
        d_sig = math.hypot(eav[0] - params.r_o, eav[1])
        expected = params.p_t * abs(g_sig[0, 0]) ** 2 * d_sig**-params.alpha / denom
        assert sir == pytest.approx(expected, rel=1e-10)

    def test_too_few_jammers_means_unbounded_sir(self):
        params = _pso_params(n_e=4)
        real = sample_network(
            NetworkParams(alpha=4.0, lambda_l=1e-12, lambda_e=1e-3, n_e=4, r_o=0.5,
                          p_t=1.0, p_j=10.0, eta=0.0),
            _config(window_radius=60.0, q=1.0), trial_rng(3, 3),
        )
        assert len(real.fd_receivers) == 0
        sir = simulate_eavesdropper_sir(params, real, FD, np.array([1.0, 1.0]), trial_rng(5, 0))
        assert sir == math.inf

    def test_modes_differ_by_rank_one_term(self):
        # identical streams: HD and FD share the signal vector and the
        # fd-receiver rows; FD appends the typical receiver's row last
        params = _pso_params(n_e=2)
        real = sample_network(params, _config(q=1.0, window_radius=60.0), trial_rng(4, 2))
        eav = np.array([2.0, 1.0])
        sir_hd = simulate_eavesdropper_sir(params, real, HD, eav, trial_rng(10, 0))
        sir_fd = simulate_eavesdropper_sir(params, real, FD, eav, trial_rng(10, 0))
        assert sir_fd < sir_hd  # extra jamming can only lower the SIR

    def test_unitary_invariance(self):
        rng = np.random.default_rng(17)
        n = 3
        z = rng.standard_normal((1, n, 2))
        g_sig = (z[..., 0] + 1j * z[..., 1]) / math.sqrt(2)
        z = rng.standard_normal((1, 6, n, 2))
        g_jam = (z[..., 0] + 1j * z[..., 1]) / math.sqrt(2)
        weights = rng.uniform(0.5, 2.0, (1, 6))
        gain = np.array([1.7])
        base, _ = _mmse_sir_batch(g_sig, g_jam, weights, gain)
        u, _ = np.linalg.qr(rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)))
        rot, _ = _mmse_sir_batch(g_sig @ u.T, g_jam @ u.T, weights, gain)
        assert rot[0] == pytest.approx(base[0], rel=1e-10)


class TestEstimatePco:
    def test_zero_threshold(self):
        est = estimate_pco(fig1_params(), _config(trials=50), 0.0)
        assert est.p_hat == 0.0
        assert est.std_err == 0.0

    def test_matches_closed_form_without_jammers(self):
        params = fig1_params(eta=0.0)
        est = estimate_pco(params, _config(q=0.0, mode=HD, trials=20000, seed=101), 1.0)
        closed = 0.014695360160066734
        assert abs(est.p_hat - closed) <= 3.0 * est.std_err

    def test_monotone_in_self_interference_at_fixed_seed(self):
        estimates = [
            estimate_pco(fig1_params(eta=eta), _config(trials=3000, seed=33), 1.0).p_hat
            for eta in (0.0, 0.1, 0.5, 1.0)
        ]
        assert all(a <= b for a, b in zip(estimates, estimates[1:]))

    def test_deterministic_and_worker_independent(self):
        params = fig1_params()
        config = _config(trials=5000, seed=99)
        serial = estimate_pco(params, config, 1.0, workers=1)
        parallel = estimate_pco(params, config, 1.0, workers=2)
        again = estimate_pco(params, config, 1.0, workers=1)
        assert serial == parallel == again

    def test_window_floor_enforced(self):
        with pytest.raises(DomainError):
            estimate_pco(fig1_params(), _config(window_radius=10.0), 1.0)

    def test_window_doubling_within_one_stderr(self):
        # edge-effect control for the reference connection-outage setup:
        # same realizations and fading, interference summed over the doubled
        # window and over its inner half, so the difference isolates the
        # truncation effect instead of resampling noise
        params = fig1_params(eta=0.1)
        config = _config(trials=100000, seed=2024, window_radius=200.0, q=0.5)
        tau_t = 1.0
        n_base = 0
        n_double = 0
        for i in range(config.trials):
            rng = trial_rng(config.seed, i)
            real = sample_network(params, config, rng)
            h0 = rng.exponential()
            signal = params.p_t * h0 * params.r_o**-params.alpha
            full = params.eta * params.p_j
            inner = params.eta * params.p_j
            for points, power in (
                (real.hd_transmitters, params.p_t),
                (real.fd_transmitters, params.p_t),
                (real.fd_receivers, params.p_j),
            ):
                gains = rng.exponential(size=len(points))
                dist = np.hypot(points[:, 0], points[:, 1])
                terms = power * gains * dist**-params.alpha
                full += float(terms.sum())
                inner += float(terms[dist <= 100.0].sum())
            n_double += signal < tau_t * full
            n_base += signal < tau_t * inner
        p_base = n_base / config.trials
        p_double = n_double / config.trials
        std_err = math.sqrt(p_base * (1.0 - p_base) / config.trials)
        assert abs(p_base - p_double) < std_err


class TestEstimatePso:
    def test_no_eavesdroppers(self):
        params = fig1_params()
        est = estimate_pso(params, _config(trials=200), 1.0)
        assert est.p_hat == 0.0

    def test_hd_mode_respects_closed_form_bound(self):
        params = _pso_params(lam_fd=1e-2)
        config = _config(window_radius=60.0, trials=20000, seed=55, mode=HD, q=1.0)
        est = estimate_pso(params, config, 1.0)
        bound = pso_hd_closed(params, 1.0, 1.0)
        assert est.p_hat <= bound + 3.0 * est.std_err

    def test_more_jammers_reduce_outage(self):
        params = NetworkParams(
            alpha=4.0, lambda_l=2e-2, lambda_e=1e-3, n_e=2, r_o=0.5,
            p_t=1.0, p_j=10.0, eta=0.0,
        )
        low = estimate_pso(params, _config(window_radius=60.0, trials=4000, seed=77, q=0.1), 1.0)
        high = estimate_pso(params, _config(window_radius=60.0, trials=4000, seed=77, q=0.9), 1.0)
        assert high.p_hat < low.p_hat

    def test_deterministic_and_worker_independent(self):
        params = _pso_params(lam_fd=1e-2)
        config = _config(window_radius=60.0, trials=3000, seed=13, q=1.0)
        serial = estimate_pso(params, config, 1.0, workers=1)
        parallel = estimate_pso(params, config, 1.0, workers=2)
        assert serial == parallel

    def test_requires_positive_threshold(self):
        with pytest.raises(DomainError):
            estimate_pso(_pso_params(), _config(window_radius=60.0), 0.0)
