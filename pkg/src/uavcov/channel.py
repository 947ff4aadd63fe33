"""Closed-form air-to-ground channel model.

Link geometry between a hovering UAV and a ground user, the elevation-angle
sigmoid for the LoS probability, and free-space plus environment excess path
loss. Everything here is a pure function; array inputs broadcast elementwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InvalidGeometryError

SPEED_OF_LIGHT = 299792458.0  # m/s, exact by definition


@dataclass(frozen=True)
class EnvironmentProfile:
    """Propagation environment for the elevation-angle LoS model.

    ``a`` and ``b`` shape the LoS-probability sigmoid (``b`` in 1/degree);
    ``mu_los_db``/``mu_nlos_db`` are the mean excess losses added to free-space
    loss on LoS/NLoS links; ``sigma_los_db``/``sigma_nlos_db`` are the
    shadowing standard deviations of those excess losses.

    The environment parameter table behind the four built-ins specifies only
    (a, b, mu_los, mu_nlos); the shadowing deviations default to 3 dB LoS /
    8 dB NLoS and should be overridden when better values are known.
    """

    name: str
    a: float
    b: float
    mu_los_db: float
    mu_nlos_db: float
    sigma_los_db: float = 3.0
    sigma_nlos_db: float = 8.0

    def __post_init__(self):
        for field in ("a", "b", "mu_los_db", "mu_nlos_db", "sigma_los_db", "sigma_nlos_db"):
            if not math.isfinite(getattr(self, field)):
                raise DomainError(f"environment {self.name!r}: {field} must be finite")
        if self.a <= 0 or self.b <= 0:
            raise DomainError(f"environment {self.name!r}: sigmoid parameters must be positive")
        if not 0.0 <= self.mu_los_db <= self.mu_nlos_db:
            raise DomainError(
                f"environment {self.name!r}: need 0 <= mu_los_db <= mu_nlos_db, "
                f"got {self.mu_los_db} / {self.mu_nlos_db}"
            )
        if self.sigma_los_db <= 0 or self.sigma_nlos_db <= 0:
            raise DomainError(f"environment {self.name!r}: shadowing deviations must be positive")


SUBURBAN = EnvironmentProfile("suburban", a=5.2, b=0.35, mu_los_db=0.1, mu_nlos_db=21.0)
URBAN = EnvironmentProfile("urban", a=10.6, b=0.18, mu_los_db=1.0, mu_nlos_db=20.0)
DENSE_URBAN = EnvironmentProfile("dense-urban", a=11.95, b=0.14, mu_los_db=1.6, mu_nlos_db=23.0)
HIGH_RISE_URBAN = EnvironmentProfile(
    "high-rise-urban", a=26.5, b=0.13, mu_los_db=2.3, mu_nlos_db=34.0
)

BUILTIN_ENVIRONMENTS: dict[str, EnvironmentProfile] = {
    env.name: env for env in (SUBURBAN, URBAN, DENSE_URBAN, HIGH_RISE_URBAN)
}


def builtin_environment(name: str) -> EnvironmentProfile:
    """Look up a built-in profile, tolerating space/underscore/case variants."""
    key = name.strip().lower().replace("_", "-").replace(" ", "-")
    if key == "highrise-urban":
        key = "high-rise-urban"
    try:
        return BUILTIN_ENVIRONMENTS[key]
    except KeyError:
        raise KeyError(
            f"unknown environment {name!r}; built-ins: {', '.join(BUILTIN_ENVIRONMENTS)}"
        ) from None


@dataclass(frozen=True)
class LinkGeometry:
    """Horizontal distance and UAV altitude of one UAV-to-user link, in meters."""

    r0_m: float
    h_m: float

    def __post_init__(self):
        if not (math.isfinite(self.r0_m) and math.isfinite(self.h_m)):
            raise InvalidGeometryError(f"geometry must be finite, got r0={self.r0_m}, h={self.h_m}")
        if self.r0_m < 0:
            raise InvalidGeometryError(f"ground distance must be >= 0, got {self.r0_m}")
        if self.h_m <= 0:
            raise InvalidGeometryError(f"altitude must be > 0, got {self.h_m}")


def slant_distance(geom: LinkGeometry) -> float:
    """3-D UAV-to-user distance sqrt(r0^2 + h^2) in meters."""
    return math.hypot(geom.r0_m, geom.h_m)


def elevation_angle_deg(geom: LinkGeometry) -> float:
    """Elevation angle at the user in degrees; 90 when the UAV is overhead."""
    return math.degrees(math.atan2(geom.h_m, geom.r0_m))


def _check_theta(theta_deg) -> np.ndarray:
    theta = np.asarray(theta_deg, dtype=float)
    if not np.all(np.isfinite(theta)) or np.any(theta < 0.0) or np.any(theta > 90.0):
        raise DomainError(f"elevation angle must lie in [0, 90] degrees, got {theta_deg!r}")
    return theta


def p_los(theta_deg, env: EnvironmentProfile):
    """LoS probability at elevation angle ``theta_deg`` (degrees, in [0, 90]).

    Sigmoid 1 / (1 + a*exp(-b*(theta - a))), strictly increasing in the angle:
    the steeper the look angle, the fewer obstructions cut the direct ray.
    """
    theta = _check_theta(theta_deg)
    out = 1.0 / (1.0 + env.a * np.exp(-env.b * (theta - env.a)))
    return float(out) if np.isscalar(theta_deg) else out


def p_nlos(theta_deg, env: EnvironmentProfile):
    """Complement of :func:`p_los`."""
    theta = _check_theta(theta_deg)
    out = 1.0 - 1.0 / (1.0 + env.a * np.exp(-env.b * (theta - env.a)))
    return float(out) if np.isscalar(theta_deg) else out


def fspl_db(f_c_hz, d_m):
    """Free-space path loss 20*log10(4*pi*f*d/c) in dB."""
    f = np.asarray(f_c_hz, dtype=float)
    d = np.asarray(d_m, dtype=float)
    if not np.all(np.isfinite(f)) or np.any(f <= 0.0):
        raise DomainError(f"carrier frequency must be positive and finite, got {f_c_hz!r}")
    if not np.all(np.isfinite(d)) or np.any(d <= 0.0):
        raise DomainError(f"distance must be positive and finite, got {d_m!r}")
    out = 20.0 * np.log10(4.0 * np.pi * f * d / SPEED_OF_LIGHT)
    return float(out) if np.isscalar(f_c_hz) and np.isscalar(d_m) else out


def _mean_path_loss_arrays(r0_m, h_m, env: EnvironmentProfile, f_c_hz):
    """Vectorized mean path loss over parallel (r0, h) arrays; no validation."""
    r0 = np.asarray(r0_m, dtype=float)
    h = np.asarray(h_m, dtype=float)
    theta = np.degrees(np.arctan2(h, r0))
    pl = 1.0 / (1.0 + env.a * np.exp(-env.b * (theta - env.a)))
    fspl = 20.0 * np.log10(4.0 * np.pi * f_c_hz * np.hypot(r0, h) / SPEED_OF_LIGHT)
    return fspl + env.mu_los_db * pl + env.mu_nlos_db * (1.0 - pl)


def mean_path_loss_db(geom: LinkGeometry, env: EnvironmentProfile, f_c_hz: float) -> float:
    """Mean path loss in dB: free-space loss plus the LoS/NLoS-averaged excess.

    Always lies between FSPL + mu_los and FSPL + mu_nlos.
    """
    if not (np.isscalar(f_c_hz) and math.isfinite(f_c_hz) and f_c_hz > 0):
        raise DomainError(f"carrier frequency must be positive and finite, got {f_c_hz!r}")
    return float(_mean_path_loss_arrays(geom.r0_m, geom.h_m, env, f_c_hz))
