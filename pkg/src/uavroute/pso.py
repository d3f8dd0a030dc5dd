"""Global-best particle swarm optimizer.

The core (``init_state`` / ``advance`` / ``minimize``) works on any scalar
objective of a flat vector.  ``init_swarm`` / ``step`` / ``optimize`` bind it
to the path cost of a scenario.

Each iteration runs in three phases: draw every random number serially
(particles in index order, dimensions in index order, r1 before r2),
evaluate all particles (optionally on a thread pool), then update the bests
serially.  Results are therefore identical with or without workers.
"""
from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Callable, NamedTuple

import numpy as np

from . import constants as C
from .cost import CostBreakdown, CostModel, CostWeights
from .path_model import EncodingSpec, Path, decode


@dataclass(frozen=True)
class PsoConfig:
    swarm_size: int = C.SWARM_SIZE
    iterations: int = C.ITERATIONS
    inertia_w: float = C.INERTIA
    cognitive_c1: float = C.COGNITIVE
    social_c2: float = C.SOCIAL
    v_max_fraction: float = C.V_MAX_FRACTION
    seed: int = 0

    def __post_init__(self):
        if self.swarm_size < 2:
            raise ValueError("swarm_size must be >= 2")
        if self.iterations < 1:
            raise ValueError("iterations must be >= 1")
        if self.cognitive_c1 < 0 or self.social_c2 < 0:
            raise ValueError("c1 and c2 must be non-negative")
        if not 0 < self.v_max_fraction <= 1:
            raise ValueError("v_max_fraction must lie in (0, 1]")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")


class Particle(NamedTuple):
    position: np.ndarray
    velocity: np.ndarray
    personal_best_position: np.ndarray
    personal_best_cost: float


@dataclass
class SwarmState:
    """Swarm arrays, one row per particle."""

    positions: np.ndarray
    velocities: np.ndarray
    costs: np.ndarray
    pbest_positions: np.ndarray
    pbest_costs: np.ndarray
    gbest_position: np.ndarray
    gbest_cost: float
    v_max: np.ndarray
    rng: np.random.Generator
    iteration: int = 0
    history: list = field(default_factory=list)

    @property
    def particles(self) -> list[Particle]:
        return [
            Particle(self.positions[i], self.velocities[i], self.pbest_positions[i], float(self.pbest_costs[i]))
            for i in range(len(self.positions))
        ]

    def copy(self) -> "SwarmState":
        rng = np.random.Generator(type(self.rng.bit_generator)())
        rng.bit_generator.state = self.rng.bit_generator.state
        return SwarmState(
            self.positions.copy(),
            self.velocities.copy(),
            self.costs.copy(),
            self.pbest_positions.copy(),
            self.pbest_costs.copy(),
            self.gbest_position.copy(),
            self.gbest_cost,
            self.v_max.copy(),
            rng,
            self.iteration,
            list(self.history),
        )


def _evaluate_all(objective, positions, executor=None) -> np.ndarray:
    if executor is None:
        return np.array([objective(x) for x in positions], dtype=float)
    return np.array(list(executor.map(objective, positions)), dtype=float)


@contextmanager
def _pool(workers):
    if workers is None or workers <= 1:
        yield None
    else:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            yield ex


def init_state(objective: Callable, lower, upper, config: PsoConfig, executor=None) -> SwarmState:
    """Uniform positions in the box, uniform velocities in ``[-v_max, v_max]``."""
    lower = np.asarray(lower, dtype=float)
    upper = np.asarray(upper, dtype=float)
    rng = np.random.default_rng(config.seed)
    n, d = config.swarm_size, lower.size
    v_max = config.v_max_fraction * (upper - lower)
    positions = rng.uniform(lower, upper, size=(n, d))
    velocities = rng.uniform(-v_max, v_max, size=(n, d))
    costs = _evaluate_all(objective, positions, executor)
    best = int(np.argmin(costs))
    return SwarmState(
        positions=positions,
        velocities=velocities,
        costs=costs,
        pbest_positions=positions.copy(),
        pbest_costs=costs.copy(),
        gbest_position=positions[best].copy(),
        gbest_cost=float(costs[best]),
        v_max=v_max,
        rng=rng,
        iteration=0,
        history=[float(costs[best])],
    )


def advance(state: SwarmState, objective: Callable, config: PsoConfig, executor=None) -> SwarmState:
    """One velocity/position update; returns a new state."""
    s = state.copy()
    n, d = s.positions.shape
    r = s.rng.random((n, d, 2))
    r1, r2 = r[..., 0], r[..., 1]
    x = s.positions
    v = (
        config.inertia_w * s.velocities
        + config.cognitive_c1 * r1 * (s.pbest_positions - x)
        + config.social_c2 * r2 * (s.gbest_position[None, :] - x)
    )
    v = np.clip(v, -s.v_max, s.v_max)
    x = x + v
    costs = _evaluate_all(objective, x, executor)

    improved = costs < s.pbest_costs
    s.pbest_positions[improved] = x[improved]
    s.pbest_costs[improved] = costs[improved]
    best = int(np.argmin(s.pbest_costs))
    if s.pbest_costs[best] < s.gbest_cost:
        s.gbest_cost = float(s.pbest_costs[best])
        s.gbest_position = s.pbest_positions[best].copy()

    s.positions, s.velocities, s.costs = x, v, costs
    s.iteration += 1
    s.history.append(s.gbest_cost)
    return s


class SwarmResult(NamedTuple):
    best_position: np.ndarray
    best_cost: float
    history: list
    state: SwarmState


def minimize(objective: Callable, lower, upper, config: PsoConfig | None = None, workers=None) -> SwarmResult:
    """Run the swarm for ``config.iterations`` steps on an arbitrary objective."""
    config = config or PsoConfig()
    with _pool(workers) as ex:
        state = init_state(objective, lower, upper, config, ex)
        for _ in range(config.iterations):
            state = advance(state, objective, config, ex)
    return SwarmResult(state.gbest_position.copy(), state.gbest_cost, list(state.history), state)


# -- path planning binding ----------------------------------------------------

class HistoryEntry(NamedTuple):
    iteration: int
    best_total: float
    best_length: float


@dataclass
class RunReport:
    best_path: Path
    best_breakdown: CostBreakdown
    history: list
    feasible: bool
    wall_time: float
    config: PsoConfig
    scenario_name: str = ""


def path_objective(scenario, spec: EncodingSpec, weights: CostWeights | None = None) -> CostModel:
    """Callable mapping a particle vector to its penalized path cost."""
    del spec  # the vector layout is fixed: x0, y0, x1, y1, ...
    return CostModel(scenario, weights)


def default_spec(scenario, n_waypoints=C.N_WAYPOINTS) -> EncodingSpec:
    return EncodingSpec(n_waypoints, scenario.bounds)


def init_swarm(scenario, spec: EncodingSpec, config: PsoConfig, weights=None, executor=None) -> SwarmState:
    return init_state(path_objective(scenario, spec, weights), spec.lower(), spec.upper(), config, executor)


def step(state: SwarmState, scenario, spec: EncodingSpec, config: PsoConfig, weights=None, executor=None) -> SwarmState:
    return advance(state, path_objective(scenario, spec, weights), config, executor)


def optimize(scenario, spec: EncodingSpec | None = None, config: PsoConfig | None = None,
             weights: CostWeights | None = None, workers=None) -> RunReport:
    """Plan a path through ``scenario``; always returns a report, feasible or not."""
    spec = spec or default_spec(scenario)
    config = config or PsoConfig()
    weights = weights or CostWeights()
    objective = path_objective(scenario, spec, weights)

    def breakdown(vec):
        return objective.breakdown(objective.vertices(vec))

    t0 = time.perf_counter()
    with _pool(workers) as ex:
        state = init_state(objective, spec.lower(), spec.upper(), config, ex)
        best = breakdown(state.gbest_position)
        history = [HistoryEntry(0, best.total, best.length)]
        for it in range(1, config.iterations + 1):
            prev = state.gbest_cost
            state = advance(state, objective, config, ex)
            if state.gbest_cost != prev:
                best = breakdown(state.gbest_position)
            history.append(HistoryEntry(it, best.total, best.length))
    wall = time.perf_counter() - t0

    path = decode(state.gbest_position, spec, scenario.start, scenario.goal)
    return RunReport(path, best, history, best.feasible, wall, config, scenario.name)


def iterations_to_within(history, rel=0.01) -> int:
    """First iteration whose best total is within ``rel`` of the final value."""
    final = history[-1].best_total
    for entry in history:
        if entry.best_total <= final + rel * abs(final):
            return entry.iteration
    return history[-1].iteration
