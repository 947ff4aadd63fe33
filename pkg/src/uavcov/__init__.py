"""UAV-to-ground link and downlink coverage modelling for emergency deployments."""

from .channel import (
    BUILTIN_ENVIRONMENTS,
    DENSE_URBAN,
    HIGH_RISE_URBAN,
    SPEED_OF_LIGHT,
    SUBURBAN,
    URBAN,
    EnvironmentProfile,
    LinkGeometry,
    builtin_environment,
    elevation_angle_deg,
    fspl_db,
    mean_path_loss_db,
    p_los,
    p_nlos,
    slant_distance,
)
from .coverage import (
    CoverageBreakdown,
    FormulationMode,
    MonteCarloEstimate,
    RadioConfig,
    branch_argument,
    coverage_monte_carlo,
    coverage_probability,
    noise_power_dbm,
    q_function,
    received_power_dbm,
)
from .errors import DomainError, InvalidGeometryError, InvalidRangeError, InvalidSpecError
from .planner import (
    AXIS_ALTITUDE,
    AXIS_DISTANCE,
    AXIS_ELEVATION,
    AltitudeOptimum,
    SweepCell,
    SweepResult,
    SweepRow,
    SweepSpec,
    max_coverage_radius,
    optimal_altitude,
    run_sweep,
    sweep_grid,
)
from .scenario import (
    ScenarioResult,
    ScenarioSpec,
    ScenarioSummary,
    UserRecord,
    energy_efficiency,
    evaluate_links,
    evaluate_scenario,
    generate_users,
)

__version__ = "0.1.0"

__all__ = [
    "AXIS_ALTITUDE",
    "AXIS_DISTANCE",
    "AXIS_ELEVATION",
    "AltitudeOptimum",
    "BUILTIN_ENVIRONMENTS",
    "CoverageBreakdown",
    "DENSE_URBAN",
    "DomainError",
    "EnvironmentProfile",
    "FormulationMode",
    "HIGH_RISE_URBAN",
    "InvalidGeometryError",
    "InvalidRangeError",
    "InvalidSpecError",
    "LinkGeometry",
    "MonteCarloEstimate",
    "RadioConfig",
    "SPEED_OF_LIGHT",
    "SUBURBAN",
    "ScenarioResult",
    "ScenarioSpec",
    "ScenarioSummary",
    "SweepCell",
    "SweepResult",
    "SweepRow",
    "SweepSpec",
    "URBAN",
    "UserRecord",
    "branch_argument",
    "builtin_environment",
    "coverage_monte_carlo",
    "coverage_probability",
    "elevation_angle_deg",
    "energy_efficiency",
    "evaluate_links",
    "evaluate_scenario",
    "fspl_db",
    "generate_users",
    "max_coverage_radius",
    "mean_path_loss_db",
    "noise_power_dbm",
    "optimal_altitude",
    "p_los",
    "p_nlos",
    "q_function",
    "received_power_dbm",
    "run_sweep",
    "slant_distance",
    "sweep_grid",
]
