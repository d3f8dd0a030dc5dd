"""Penalized path cost: length plus weighted threat and out-of-bounds terms."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from types import MappingProxyType

import numpy as np

from . import constants as C
from .errors import EndpointMismatch
from .geometry import ThreatKind, sample_segments, violation_matrix
from .path_model import Path


def _default_multipliers():
    return MappingProxyType({ThreatKind.RADAR: 1.0, ThreatKind.ARTILLERY: 1.0})


@dataclass(frozen=True)
class CostWeights:
    w_threat: float = C.W_THREAT
    w_bounds: float = C.W_BOUNDS
    per_kind_multiplier: MappingProxyType = field(default_factory=_default_multipliers)
    samples: int = C.SAMPLES_PER_SEGMENT

    def __post_init__(self):
        mult = {ThreatKind.RADAR: 1.0, ThreatKind.ARTILLERY: 1.0}
        mult.update({ThreatKind(k): float(v) for k, v in dict(self.per_kind_multiplier).items()})
        object.__setattr__(self, "per_kind_multiplier", MappingProxyType(mult))
        for name, v in (("w_threat", self.w_threat), ("w_bounds", self.w_bounds), *((k.value, v) for k, v in mult.items())):
            if not (math.isfinite(v) and v >= 0):
                raise ValueError(f"weight {name} must be finite and >= 0, got {v!r}")
        if self.samples < 2:
            raise ValueError("samples must be >= 2")


@dataclass(frozen=True)
class CostBreakdown:
    length: float
    threat_violation: float
    bounds_violation: float
    total: float

    @property
    def feasible(self) -> bool:
        return self.threat_violation == 0.0 and self.bounds_violation == 0.0


def bounds_excursion(vertices, bounds, samples=C.SAMPLES_PER_SEGMENT) -> float:
    """Sampled line integral of the distance outside ``bounds`` along a polyline."""
    v = np.asarray(vertices, dtype=float)
    if (
        v[:, 0].min() >= bounds.x_min and v[:, 0].max() <= bounds.x_max
        and v[:, 1].min() >= bounds.y_min and v[:, 1].max() <= bounds.y_max
    ):
        # the box is convex: every segment stays inside
        return 0.0
    a, b = v[:-1], v[1:]
    pts = sample_segments(a, b, samples)
    dx = np.maximum(np.maximum(bounds.x_min - pts[..., 0], pts[..., 0] - bounds.x_max), 0.0)
    dy = np.maximum(np.maximum(bounds.y_min - pts[..., 1], pts[..., 1] - bounds.y_max), 0.0)
    lengths = np.hypot(b[:, 0] - a[:, 0], b[:, 1] - a[:, 1])
    per_seg = np.hypot(dx, dy).mean(axis=1) * lengths
    return math.fsum(per_seg.tolist())


class CostModel:
    """A scenario and weights with the threat arrays prepared once.

    ``breakdown`` takes the full vertex array, start and goal included.
    """

    def __init__(self, scenario, weights: CostWeights | None = None):
        self.scenario = scenario
        self.weights = weights or CostWeights()
        self.centers = scenario.centers()
        self.radii = scenario.radii()
        self.multipliers = np.array(
            [self.weights.per_kind_multiplier[t.kind] for t in scenario.threats], dtype=float
        )
        self._start = np.array(scenario.start, dtype=float)
        self._goal = np.array(scenario.goal, dtype=float)

    def vertices(self, vec) -> np.ndarray:
        inner = np.asarray(vec, dtype=float).reshape(-1, 2)
        return np.vstack([self._start, inner, self._goal])

    def breakdown(self, v) -> CostBreakdown:
        w = self.weights
        seg = v[1:] - v[:-1]
        length = math.fsum(np.hypot(seg[:, 0], seg[:, 1]).tolist())
        threat = 0.0
        if self.radii.size:
            per_pair = violation_matrix(v[:-1], v[1:], self.centers, self.radii, w.samples)
            threat = math.fsum((per_pair * self.multipliers[None, :]).ravel().tolist())
        excursion = bounds_excursion(v, self.scenario.bounds, w.samples)
        total = length + w.w_threat * threat + w.w_bounds * excursion
        return CostBreakdown(length, threat, excursion, total)

    def __call__(self, vec) -> float:
        """Total cost of a flat interior-waypoint vector."""
        return self.breakdown(self.vertices(vec)).total


def evaluate(path: Path, scenario, weights: CostWeights | None = None) -> CostBreakdown:
    """Score ``path`` in ``scenario``.

    ``threat_violation`` is the kind-weighted sum of sampled penetration
    integrals over every (segment, threat) pair.  Sums use ``math.fsum`` so
    the result does not depend on how many zero terms are present.
    """
    if path.start != scenario.start or path.goal != scenario.goal:
        raise EndpointMismatch(
            f"path runs {tuple(path.start)} -> {tuple(path.goal)}, "
            f"scenario expects {tuple(scenario.start)} -> {tuple(scenario.goal)}"
        )
    return CostModel(scenario, weights).breakdown(path.as_array())
