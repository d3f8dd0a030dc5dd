"""Waypoint paths and their flat particle encoding."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .constants import N_WAYPOINTS
from .errors import DimensionMismatch
from .geometry import Bounds, Point

DEFAULT_WAYPOINTS = N_WAYPOINTS


@dataclass(frozen=True)
class Path:
    start: Point
    goal: Point
    interior: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "start", Point(*map(float, self.start)))
        object.__setattr__(self, "goal", Point(*map(float, self.goal)))
        object.__setattr__(self, "interior", tuple(Point(*map(float, p)) for p in self.interior))

    @property
    def vertices(self) -> list[Point]:
        return [self.start, *self.interior, self.goal]

    def as_array(self) -> np.ndarray:
        """Vertices as an ``(n + 2, 2)`` float array."""
        return np.array(self.vertices, dtype=float)

    def __len__(self):
        return len(self.interior) + 2


@dataclass(frozen=True)
class EncodingSpec:
    n_waypoints: int
    bounds: Bounds

    def __post_init__(self):
        if int(self.n_waypoints) != self.n_waypoints or self.n_waypoints < 1:
            raise DimensionMismatch(f"n_waypoints must be an integer >= 1, got {self.n_waypoints!r}")

    @property
    def dimension(self) -> int:
        return 2 * self.n_waypoints

    def lower(self) -> np.ndarray:
        return np.tile([self.bounds.x_min, self.bounds.y_min], self.n_waypoints).astype(float)

    def upper(self) -> np.ndarray:
        return np.tile([self.bounds.x_max, self.bounds.y_max], self.n_waypoints).astype(float)


def decode(position, spec: EncodingSpec, start, goal) -> Path:
    """Pair consecutive entries of ``position`` into interior waypoints.

    No clamping happens here; out-of-bounds waypoints are left for the cost
    function to penalize.
    """
    vec = np.asarray(position, dtype=float).reshape(-1)
    if vec.size != spec.dimension:
        raise DimensionMismatch(f"expected vector of length {spec.dimension}, got {vec.size}")
    pts = vec.reshape(-1, 2)
    return Path(start, goal, tuple(Point(float(x), float(y)) for x, y in pts))


def encode(path: Path) -> np.ndarray:
    """Flatten the interior waypoints back into a particle vector."""
    if not path.interior:
        return np.zeros(0)
    return np.array(path.interior, dtype=float).reshape(-1)


def path_length(path: Path) -> float:
    v = path.as_array()
    seg = np.diff(v, axis=0)
    return math.fsum(np.hypot(seg[:, 0], seg[:, 1]).tolist())
