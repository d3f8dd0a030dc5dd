"""Planar points, circular threats and segment/threat measures.

Everything here is a pure function.  The array kernels (``clearance_matrix``
and ``violation_matrix``) are what the cost function uses; the scalar
functions are thin wrappers so both paths agree bit for bit.
"""
from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .constants import SAMPLES_PER_SEGMENT

DEFAULT_SAMPLES = SAMPLES_PER_SEGMENT


class Point(NamedTuple):
    x: float
    y: float

    def translated(self, dx: float, dy: float) -> "Point":
        return Point(self.x + dx, self.y + dy)


class ThreatKind(enum.Enum):
    RADAR = "radar"
    ARTILLERY = "artillery"


@dataclass(frozen=True)
class Threat:
    center: Point
    radius: float
    kind: ThreatKind = ThreatKind.RADAR

    def __post_init__(self):
        object.__setattr__(self, "center", Point(float(self.center[0]), float(self.center[1])))
        if not (math.isfinite(self.radius) and self.radius > 0):
            raise ValueError(f"threat radius must be finite and > 0, got {self.radius!r}")

    def contains(self, p: Point) -> bool:
        """True if ``p`` lies strictly inside the disc."""
        return distance(p, self.center) < self.radius

    def translated(self, dx: float, dy: float) -> "Threat":
        return Threat(self.center.translated(dx, dy), self.radius, self.kind)


@dataclass(frozen=True)
class Bounds:
    x_min: float
    x_max: float
    y_min: float
    y_max: float

    def __post_init__(self):
        vals = (self.x_min, self.x_max, self.y_min, self.y_max)
        if not all(math.isfinite(v) for v in vals):
            raise ValueError(f"bounds must be finite, got {vals}")
        if not (self.x_min < self.x_max and self.y_min < self.y_max):
            raise ValueError(f"degenerate bounds {vals}")

    @property
    def width(self) -> float:
        return self.x_max - self.x_min

    @property
    def height(self) -> float:
        return self.y_max - self.y_min

    def contains(self, p: Point) -> bool:
        return self.x_min <= p.x <= self.x_max and self.y_min <= p.y <= self.y_max

    def translated(self, dx: float, dy: float) -> "Bounds":
        return Bounds(self.x_min + dx, self.x_max + dx, self.y_min + dy, self.y_max + dy)


def distance(p, q) -> float:
    return math.hypot(q[0] - p[0], q[1] - p[1])


def _canonical_order(a, b):
    # Lexicographic ordering of the endpoints makes every measure exactly
    # symmetric in (a, b).
    swap = (a[:, 0] > b[:, 0]) | ((a[:, 0] == b[:, 0]) & (a[:, 1] > b[:, 1]))
    lo = np.where(swap[:, None], b, a)
    hi = np.where(swap[:, None], a, b)
    return lo, hi


def clearance_matrix(a, b, centers, radii):
    """Signed clearance of every segment against every threat.

    Parameters
    ----------
    a, b : ndarray of shape (S, 2)
        Segment endpoints.
    centers : ndarray of shape (T, 2)
    radii : ndarray of shape (T,)

    Returns
    -------
    ndarray of shape (S, T)
        Minimum distance from each center to each segment minus the radius.
    """
    a = np.asarray(a, dtype=float).reshape(-1, 2)
    b = np.asarray(b, dtype=float).reshape(-1, 2)
    centers = np.asarray(centers, dtype=float).reshape(-1, 2)
    radii = np.asarray(radii, dtype=float).reshape(-1)
    a, b = _canonical_order(a, b)
    ab = b - a
    ab2 = np.einsum("ij,ij->i", ab, ab)
    ac = centers[None, :, :] - a[:, None, :]
    dot = np.einsum("sj,stj->st", ab, ac)
    with np.errstate(invalid="ignore", divide="ignore"):
        s = np.where(ab2[:, None] > 0, dot / ab2[:, None], 0.0)
    s = np.clip(s, 0.0, 1.0)
    closest = a[:, None, :] + s[:, :, None] * ab[:, None, :]
    diff = centers[None, :, :] - closest
    return np.hypot(diff[..., 0], diff[..., 1]) - radii[None, :]


@functools.lru_cache(maxsize=32)
def _sample_params(samples):
    if samples < 2:
        raise ValueError("samples must be >= 2")
    s = np.linspace(0.0, 1.0, samples)
    s.flags.writeable = False
    return s


def sample_segments(a, b, samples):
    """Equally spaced points along each segment, endpoints included -> (S, N, 2)."""
    s = _sample_params(samples)
    a = np.asarray(a, dtype=float).reshape(-1, 2)
    b = np.asarray(b, dtype=float).reshape(-1, 2)
    return a[:, None, :] + s[None, :, None] * (b - a)[:, None, :]


def violation_matrix(a, b, centers, radii, samples=DEFAULT_SAMPLES):
    """Sampled penetration integral of every segment through every threat.

    The penetration depth at a point at distance ``d`` from a threat center
    is ``sqrt(max(0, r**2 - d**2))``.  It is averaged over ``samples``
    equally spaced points and multiplied by the segment length.  Pairs whose
    exact clearance is non-negative are zero by construction, and only the
    remaining pairs are sampled.

    Returns
    -------
    ndarray of shape (S, T)
    """
    a = np.asarray(a, dtype=float).reshape(-1, 2)
    b = np.asarray(b, dtype=float).reshape(-1, 2)
    centers = np.asarray(centers, dtype=float).reshape(-1, 2)
    radii = np.asarray(radii, dtype=float).reshape(-1)
    out = np.zeros((a.shape[0], centers.shape[0]))
    if centers.shape[0] == 0:
        return out
    a, b = _canonical_order(a, b)
    si, ti = np.nonzero(clearance_matrix(a, b, centers, radii) < 0.0)
    if si.size == 0:
        return out
    pa, pb = a[si], b[si]
    pts = sample_segments(pa, pb, samples)
    diff = pts - centers[ti][:, None, :]
    d2 = diff[..., 0] ** 2 + diff[..., 1] ** 2
    depth = np.sqrt(np.maximum(radii[ti][:, None] ** 2 - d2, 0.0))
    lengths = np.hypot(pb[:, 0] - pa[:, 0], pb[:, 1] - pa[:, 1])
    out[si, ti] = depth.mean(axis=1) * lengths
    return out


def segment_clearance(a, b, t: Threat) -> float:
    """Distance from the threat center to segment ``ab`` minus the radius.

    Negative values mean the segment cuts the disc; zero is tangency.
    """
    return float(clearance_matrix([a], [b], [t.center], [t.radius])[0, 0])


def segment_violation(a, b, t: Threat, samples: int = DEFAULT_SAMPLES) -> float:
    return float(violation_matrix([a], [b], [t.center], [t.radius], samples)[0, 0])
