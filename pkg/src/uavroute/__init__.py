"""Threat-aware UAV route planning with particle swarm optimization.

Paths are constant-altitude polylines from a fixed start to a fixed goal
through a field of circular radar and artillery threats.  A global-best
particle swarm moves the interior waypoints to minimize a penalized length;
a grid planner serves as an independent reference.
"""
from .cost import CostBreakdown, CostModel, CostWeights, evaluate
from .errors import (
    DimensionMismatch,
    DuplicateKey,
    EmptyHistory,
    EndpointMismatch,
    GenerationFailed,
    GoalBlocked,
    NoPath,
    ScenarioSyntaxError,
    StartBlocked,
    UavRouteError,
    ValidationError,
)
from .geometry import Bounds, Point, Threat, ThreatKind, distance, segment_clearance, segment_violation
from .oracle import GridSpec, grid_shortest_path, octile_lower_bound
from .path_model import EncodingSpec, Path, decode, encode, path_length
from .pso import PsoConfig, RunReport, SwarmState, init_swarm, minimize, optimize, step
from .reporting import read_convergence_csv, render_svg, write_convergence_csv
from .scenario import ComplexityClass, Scenario, generate_scenario, parse_scenario, serialize_scenario

__version__ = "0.1.0"
