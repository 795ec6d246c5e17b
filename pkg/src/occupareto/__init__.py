"""Decision support for workplace occupancy under epidemic risk: expected
infections and total productivity as functions of occupancy, and the Pareto
frontier trading the two off."""

from .params import BETA_PRESETS, VACCINE_EFFICACY, OrganizationParams, ParameterError
from .epidemic import (
    ComputationError,
    DetectionStats,
    InfectionTrajectory,
    arrival_probability,
    contacts_per_day,
    cumulative_infections,
    expected_detection_time,
    facility_arrival_probability,
    normalized_productivity,
    per_employee_arrival_probability,
    total_productivity,
    trajectory_single_group,
    trajectory_two_group,
)
from .pipeline import DEFAULT_PIPELINE, ObjectivePipeline, evaluate_objectives
from .pareto import (
    ParetoFrontier,
    ParetoPoint,
    brute_force_frontier,
    enumerate_candidates,
    evaluate_strategy,
    pareto_sweep,
)
from .abm import SimulationConfig, SimulationResult, mape, simulate
from .scenarios import (
    TABLE2,
    VALIDATION_MANIFEST,
    ScenarioConfig,
    ScenarioResult,
    figure3_curves,
    run_all,
    run_scenario,
    run_validation,
    scenario_params,
    whatif_productivity_target,
)

__version__ = "0.1.0"
