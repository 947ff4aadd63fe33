"""Downlink coverage probability under dB-domain Gaussian shadowing.

The analytic model mixes a Gaussian-tail term per link class (LoS, NLoS),
weighted by the LoS probability. A seeded Monte Carlo estimator drawing from
the same generative model serves as the independent cross-check.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy import special

from .channel import (
    EnvironmentProfile,
    LinkGeometry,
    SPEED_OF_LIGHT,
    elevation_angle_deg,
    fspl_db,
    p_los,
    slant_distance,
)
from .errors import DomainError

_SQRT2 = math.sqrt(2.0)

# Monte Carlo draws are partitioned into fixed-size chunks; chunk k always
# consumes the counter-based stream Philox(seed).jumped(k), so the estimate is
# a sum of integers that no scheduling order can change.
_MC_CHUNK = 1 << 15


class FormulationMode(str, Enum):
    """How the per-branch deficit terms of the coverage mixture are assembled.

    ``standard`` puts the free-space loss plus one per-branch excess loss in
    the numerator and normalizes by the shadowing standard deviation; it is
    the reading consistent with Gaussian excess loss and is what the Monte
    Carlo estimator validates. ``paper-literal`` reproduces the published form
    of the arguments verbatim for auditing: the LoS/NLoS-averaged path loss in
    the numerator (so the branch excess is counted twice) and the variance as
    the normalizer.
    """

    STANDARD = "standard"
    PAPER_LITERAL = "paper-literal"


@dataclass(frozen=True)
class RadioConfig:
    """Link-budget constants for the UAV downlink.

    Defaults: 2 GHz carrier, 40 dBm (10 W) UAV transmit power, 3 dB antenna
    gain, -80 dBm receiver threshold, -174 dBm/Hz noise density, 5 MHz channel.
    """

    f_c_hz: float = 2e9
    p_tx_dbm: float = 40.0
    g_db: float = 3.0
    p_min_dbm: float = -80.0
    noise_density_dbm_hz: float = -174.0
    bandwidth_hz: float = 5e6

    def __post_init__(self):
        for field in (
            "f_c_hz", "p_tx_dbm", "g_db", "p_min_dbm", "noise_density_dbm_hz", "bandwidth_hz",
        ):
            if not math.isfinite(getattr(self, field)):
                raise DomainError(f"radio config: {field} must be finite")
        if self.f_c_hz <= 0:
            raise DomainError(f"radio config: carrier frequency must be > 0, got {self.f_c_hz}")
        if self.bandwidth_hz <= 0:
            raise DomainError(f"radio config: bandwidth must be > 0, got {self.bandwidth_hz}")


@dataclass(frozen=True)
class CoverageBreakdown:
    """Per-link coverage decomposition: weights, losses, deficits, tails."""

    p_los: float
    p_nlos: float
    fspl_db: float
    deficit_los: float
    deficit_nlos: float
    q_los: float
    q_nlos: float
    p_cov: float


@dataclass(frozen=True)
class MonteCarloEstimate:
    estimate: float
    std_error: float
    n_samples: int


def q_function(x):
    """Standard normal tail probability P(Z > x)."""
    out = 0.5 * special.erfc(np.asarray(x, dtype=float) / _SQRT2)
    return float(out) if np.isscalar(x) else out


def branch_argument(
    radio: RadioConfig,
    path_loss_db: float,
    mu_db: float,
    sigma_db: float,
    mode: FormulationMode | str = FormulationMode.STANDARD,
) -> float:
    """Deficit argument of one coverage branch (fed to the Gaussian tail).

    ``path_loss_db`` is the free-space loss in ``standard`` mode and the full
    LoS/NLoS-averaged path loss in ``paper-literal`` mode; the mode also picks
    the normalizer (standard deviation vs. variance).
    """
    if not (math.isfinite(sigma_db) and sigma_db > 0):
        raise DomainError(f"shadowing deviation must be > 0, got {sigma_db}")
    mode = FormulationMode(mode)
    # same association as the vectorized coverage path, so breakdown deficits
    # match this function bit for bit
    numerator = (radio.p_min_dbm - radio.p_tx_dbm - radio.g_db) + path_loss_db + mu_db
    if mode is FormulationMode.PAPER_LITERAL:
        return numerator / (sigma_db * sigma_db)
    return numerator / sigma_db


def _coverage_arrays(r0_m, h_m, env: EnvironmentProfile, radio: RadioConfig,
                     mode: FormulationMode):
    """Vectorized coverage evaluation over parallel (r0, h) arrays.

    Returns (p_los, p_nlos, fspl, mean_pl, a, b, q_los, q_nlos, p_cov).
    """
    r0 = np.asarray(r0_m, dtype=float)
    h = np.asarray(h_m, dtype=float)
    theta = np.degrees(np.arctan2(h, r0))
    pl = 1.0 / (1.0 + env.a * np.exp(-env.b * (theta - env.a)))
    pn = 1.0 - pl
    fspl = 20.0 * np.log10(4.0 * np.pi * radio.f_c_hz * np.hypot(r0, h) / SPEED_OF_LIGHT)
    mean_pl = fspl + env.mu_los_db * pl + env.mu_nlos_db * pn
    budget = radio.p_min_dbm - radio.p_tx_dbm - radio.g_db
    if mode is FormulationMode.PAPER_LITERAL:
        a = (budget + mean_pl + env.mu_los_db) / (env.sigma_los_db * env.sigma_los_db)
        b = (budget + mean_pl + env.mu_nlos_db) / (env.sigma_nlos_db * env.sigma_nlos_db)
    else:
        a = (budget + fspl + env.mu_los_db) / env.sigma_los_db
        b = (budget + fspl + env.mu_nlos_db) / env.sigma_nlos_db
    q_los = 0.5 * special.erfc(a / _SQRT2)
    q_nlos = 0.5 * special.erfc(b / _SQRT2)
    # q_nlos + pl*(q_los - q_nlos) == pl*q_los + pn*q_nlos, but collapses
    # bit-exactly to the common tail when both branches coincide
    p_cov = q_nlos + pl * (q_los - q_nlos)
    return pl, pn, fspl, mean_pl, a, b, q_los, q_nlos, p_cov


def coverage_probability(
    geom: LinkGeometry,
    env: EnvironmentProfile,
    radio: RadioConfig,
    mode: FormulationMode | str = FormulationMode.STANDARD,
) -> CoverageBreakdown:
    """Probability that received power meets the threshold, with full breakdown."""
    mode = FormulationMode(mode)
    pl, pn, fspl, _, a, b, q_l, q_n, p_cov = _coverage_arrays(
        geom.r0_m, geom.h_m, env, radio, mode
    )
    return CoverageBreakdown(
        p_los=float(pl),
        p_nlos=float(pn),
        fspl_db=float(fspl),
        deficit_los=float(a),
        deficit_nlos=float(b),
        q_los=float(q_l),
        q_nlos=float(q_n),
        p_cov=float(p_cov),
    )


def coverage_monte_carlo(
    geom: LinkGeometry,
    env: EnvironmentProfile,
    radio: RadioConfig,
    n_samples: int,
    seed: int,
    workers: int = 1,
) -> MonteCarloEstimate:
    """Estimate coverage by sampling the generative shadowing model.

    Each draw picks LoS with probability p_los(elevation), adds Gaussian
    excess loss for that class, and tests received power against the
    threshold. Fixed seeds give bit-identical estimates for any ``workers``.
    """
    if n_samples < 1:
        raise DomainError(f"need at least one sample, got {n_samples}")
    if seed < 0:
        raise DomainError(f"seed must be a non-negative integer, got {seed}")
    pl = p_los(elevation_angle_deg(geom), env)
    fspl = fspl_db(radio.f_c_hz, slant_distance(geom))
    # covered iff excess loss X <= link margin
    margin = radio.p_tx_dbm + radio.g_db - fspl - radio.p_min_dbm

    def covered_in_chunk(k: int) -> int:
        size = min(_MC_CHUNK, n_samples - k * _MC_CHUNK)
        rng = np.random.Generator(np.random.Philox(seed).jumped(k))
        u = rng.random(size)
        z = rng.standard_normal(size)
        x = np.where(
            u < pl,
            env.mu_los_db + env.sigma_los_db * z,
            env.mu_nlos_db + env.sigma_nlos_db * z,
        )
        return int(np.count_nonzero(x <= margin))

    n_chunks = (n_samples + _MC_CHUNK - 1) // _MC_CHUNK
    if workers > 1 and n_chunks > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            covered = sum(pool.map(covered_in_chunk, range(n_chunks)))
    else:
        covered = sum(covered_in_chunk(k) for k in range(n_chunks))

    estimate = covered / n_samples
    std_error = math.sqrt(estimate * (1.0 - estimate) / n_samples)
    return MonteCarloEstimate(estimate=estimate, std_error=std_error, n_samples=n_samples)


def received_power_dbm(radio: RadioConfig, total_path_loss_db: float) -> float:
    """Received power: transmit power plus antenna gain minus total loss."""
    return radio.p_tx_dbm + radio.g_db - total_path_loss_db


def noise_power_dbm(radio: RadioConfig) -> float:
    """Thermal noise integrated over the channel bandwidth."""
    return radio.noise_density_dbm_hz + 10.0 * math.log10(radio.bandwidth_hz)
