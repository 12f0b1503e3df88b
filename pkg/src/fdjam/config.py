"""Run configuration: flat INI files with one section per concern.

Sections and keys (all lowercase, human-diffable):

[network]    alpha, lambda_l, lambda_e, n_e, r_o, p_t, p_c,
             eta or eta_db, and exactly one of p_j / rho / rho_db
[rates]      tau_t, tau_e  (or r_t, r_s to derive them)
[outage]     sigma, epsilon
[simulation] trials, seed, q, mode (hd|fd), window_radius (default 100*r_o)
[quadrature] rel_tol, max_panels, tail_cut
[optimize]   omega_min

Command-line flags override file values. Keys with the explicit `_db`
suffix are converted from decibels at this boundary; everywhere else the
library works in linear units.
"""

from __future__ import annotations

import configparser
from pathlib import Path

from .errors import ConfigError, DomainError
from .model import DuplexMode, NetworkParams, RateThresholds
from .outage import QuadratureSpec
from .simulate import SimulationConfig


def read_config(path: str | Path) -> configparser.ConfigParser:
    parser = configparser.ConfigParser()
    try:
        with open(path, "r", encoding="utf-8") as handle:
            parser.read_file(handle)
    except FileNotFoundError:
        raise ConfigError(f"config file not found: {path}") from None
    except configparser.Error as exc:
        raise ConfigError(f"config file {path} is malformed: {exc}") from None
    return parser


def _require(parser: configparser.ConfigParser, section: str, key: str) -> str:
    if not parser.has_section(section):
        raise ConfigError(f"missing section [{section}] (first required key: {key})")
    value = parser.get(section, key, fallback=None)
    if value is None:
        raise ConfigError(f"[{section}] {key} is required")
    return value


def _get_float(parser, section: str, key: str, default: float | None = None) -> float:
    raw = parser.get(section, key, fallback=None) if parser.has_section(section) else None
    if raw is None:
        if default is None:
            return _as_float(section, key, _require(parser, section, key))
        return default
    return _as_float(section, key, raw)


def _as_float(section: str, key: str, raw: str) -> float:
    try:
        return float(raw)
    except ValueError:
        raise ConfigError(f"[{section}] {key} must be a number, got {raw!r}") from None


def _db_to_linear(db: float) -> float:
    return 10.0 ** (db / 10.0)


def _linear_or_db(parser, section: str, key: str, default: float | None = None) -> float:
    """Value given either directly or as `<key>_db`; both at once is an error."""
    has_lin = parser.has_option(section, key) if parser.has_section(section) else False
    has_db = parser.has_option(section, f"{key}_db") if parser.has_section(section) else False
    if has_lin and has_db:
        raise ConfigError(f"[{section}] give {key} or {key}_db, not both")
    if has_db:
        return _db_to_linear(_get_float(parser, section, f"{key}_db"))
    if has_lin or default is None:
        return _get_float(parser, section, key)
    return default


def network_from_config(parser: configparser.ConfigParser) -> NetworkParams:
    section = "network"
    alpha = _get_float(parser, section, "alpha")
    lambda_l = _get_float(parser, section, "lambda_l")
    lambda_e = _get_float(parser, section, "lambda_e")
    n_e = _get_float(parser, section, "n_e")
    r_o = _get_float(parser, section, "r_o")
    p_t = _get_float(parser, section, "p_t")
    p_c = _get_float(parser, section, "p_c", 0.0)
    eta = _linear_or_db(parser, section, "eta")
    has_pj = parser.has_option(section, "p_j")
    has_rho = parser.has_option(section, "rho") or parser.has_option(section, "rho_db")
    if has_pj and has_rho:
        raise ConfigError("[network] give p_j or rho/rho_db, not both")
    if has_pj:
        p_j = _get_float(parser, section, "p_j")
    elif has_rho:
        p_j = _linear_or_db(parser, section, "rho") * p_t
    else:
        raise ConfigError("[network] p_j is required (or rho / rho_db)")
    try:
        return NetworkParams(
            alpha=alpha, lambda_l=lambda_l, lambda_e=lambda_e, n_e=int(n_e),
            r_o=r_o, p_t=p_t, p_j=p_j, eta=eta, p_c=p_c,
        )
    except DomainError as exc:
        raise ConfigError(f"[network] {exc}") from None


def sir_thresholds_from_config(parser: configparser.ConfigParser) -> tuple[float, float]:
    """(tau_t, tau_e), given directly or derived from wiretap-code rates."""
    section = "rates"
    has_tau = parser.has_section(section) and parser.has_option(section, "tau_t")
    has_rate = parser.has_section(section) and parser.has_option(section, "r_t")
    if has_tau and has_rate:
        raise ConfigError("[rates] give tau_t/tau_e or r_t/r_s, not both")
    if has_rate:
        rates = RateThresholds(
            r_t=_get_float(parser, section, "r_t"), r_s=_get_float(parser, section, "r_s")
        )
        return rates.tau_t, rates.tau_e
    return _get_float(parser, section, "tau_t"), _get_float(parser, section, "tau_e")


def outage_targets_from_config(parser: configparser.ConfigParser) -> tuple[float, float]:
    return _get_float(parser, "outage", "sigma"), _get_float(parser, "outage", "epsilon")


def simulation_from_config(
    parser: configparser.ConfigParser,
    params: NetworkParams,
    trials: int | None = None,
    seed: int | None = None,
) -> SimulationConfig:
    section = "simulation"
    mode_raw = (
        parser.get(section, "mode", fallback="fd") if parser.has_section(section) else "fd"
    )
    try:
        mode = DuplexMode(mode_raw.strip().lower())
    except ValueError:
        raise ConfigError(f"[simulation] mode must be hd or fd, got {mode_raw!r}") from None
    cfg_trials = int(_get_float(parser, section, "trials", 10000.0))
    cfg_seed = int(_get_float(parser, section, "seed", 0.0))
    try:
        return SimulationConfig(
            window_radius=_get_float(
                parser, section, "window_radius", 100.0 * params.r_o
            ),
            trials=trials if trials is not None else cfg_trials,
            seed=seed if seed is not None else cfg_seed,
            mode=mode,
            q=_get_float(parser, section, "q"),
        )
    except DomainError as exc:
        raise ConfigError(f"[simulation] {exc}") from None


def quadrature_from_config(parser: configparser.ConfigParser) -> QuadratureSpec:
    try:
        return QuadratureSpec(
            rel_tol=_get_float(parser, "quadrature", "rel_tol", 1e-8),
            max_panels=int(_get_float(parser, "quadrature", "max_panels", 4096.0)),
            tail_cut=_get_float(parser, "quadrature", "tail_cut", 40.0),
        )
    except DomainError as exc:
        raise ConfigError(f"[quadrature] {exc}") from None


def omega_min_from_config(parser: configparser.ConfigParser) -> float:
    return _get_float(parser, "optimize", "omega_min", 0.0)
