"""Scenario model, the line-oriented scenario file format, and generators.

File format (UTF-8, ``#`` starts a comment, blank lines ignored)::

    scenario <name>
    bounds <x_min> <y_min> <x_max> <y_max>
    start <x> <y>
    goal <x> <y>
    threat <radar|artillery> <cx> <cy> <radius>

Header keys appear exactly once; ``threat`` lines may repeat and keep their
order.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from . import constants as C
from .errors import DuplicateKey, GenerationFailed, NoPath, ScenarioSyntaxError, ValidationError
from .geometry import Bounds, Point, Threat, ThreatKind, distance

HEADER_KEYS = ("scenario", "bounds", "start", "goal")


class ComplexityClass(enum.Enum):
    LOW = "low"
    MEDIUM = "medium"
    HIGH = "high"

    @classmethod
    def parse(cls, text: str) -> "ComplexityClass":
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise ValueError(f"unknown complexity class {text!r}; expected low, medium or high") from None


@dataclass(frozen=True)
class Scenario:
    name: str
    bounds: Bounds
    start: Point
    goal: Point
    threats: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "start", Point(*map(float, self.start)))
        object.__setattr__(self, "goal", Point(*map(float, self.goal)))
        object.__setattr__(self, "threats", tuple(self.threats))

    def validate(self) -> "Scenario":
        """Raise ValidationError on the first broken invariant, else return self."""
        if not self.name or self.name != self.name.strip() or any(ch in self.name for ch in "\r\n#"):
            raise ValidationError(f"invalid scenario name {self.name!r}")
        for label, p in (("start", self.start), ("goal", self.goal)):
            if not all(math.isfinite(v) for v in p):
                raise ValidationError(f"{label} has non-finite coordinates {tuple(p)}")
            if not self.bounds.contains(p):
                raise ValidationError(f"{label} {tuple(p)} lies outside the bounds")
        for i, t in enumerate(self.threats):
            if not all(math.isfinite(v) for v in t.center):
                raise ValidationError(f"threat {i} has non-finite center")
            if not self.bounds.contains(t.center):
                raise ValidationError(f"threat {i} center {tuple(t.center)} lies outside the bounds")
            for label, p in (("start", self.start), ("goal", self.goal)):
                if distance(p, t.center) <= t.radius:
                    raise ValidationError(f"{label} lies inside threat {i}")
        return self

    def with_threats(self, threats) -> "Scenario":
        return Scenario(self.name, self.bounds, self.start, self.goal, tuple(threats))

    def translated(self, dx: float, dy: float) -> "Scenario":
        return Scenario(
            self.name,
            self.bounds.translated(dx, dy),
            self.start.translated(dx, dy),
            self.goal.translated(dx, dy),
            tuple(t.translated(dx, dy) for t in self.threats),
        )

    def centers(self) -> np.ndarray:
        return np.array([t.center for t in self.threats], dtype=float).reshape(-1, 2)

    def radii(self) -> np.ndarray:
        return np.array([t.radius for t in self.threats], dtype=float)


# -- text format -------------------------------------------------------------

def _numbers(tokens, count, lineno, key):
    if len(tokens) != count:
        raise ScenarioSyntaxError(lineno, f"'{key}' expects {count} numbers, got {len(tokens)}")
    out = []
    for tok in tokens:
        try:
            v = float(tok)
        except ValueError:
            raise ScenarioSyntaxError(lineno, f"'{key}': {tok!r} is not a number") from None
        if not math.isfinite(v):
            raise ScenarioSyntaxError(lineno, f"'{key}': {tok!r} is not finite")
        out.append(v)
    return out


def parse_scenario(text: str) -> Scenario:
    header = {}
    threats = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.replace("\t", " ").partition(" ")
        rest = rest.strip()
        tokens = rest.split()
        if key in header:
            raise DuplicateKey(lineno, f"duplicate key '{key}'")
        if key == "scenario":
            if not rest:
                raise ScenarioSyntaxError(lineno, "'scenario' needs a name")
            header[key] = rest
        elif key == "bounds":
            x_min, y_min, x_max, y_max = _numbers(tokens, 4, lineno, key)
            try:
                header[key] = Bounds(x_min, x_max, y_min, y_max)
            except ValueError as exc:
                raise ValidationError(str(exc)) from None
        elif key in ("start", "goal"):
            header[key] = Point(*_numbers(tokens, 2, lineno, key))
        elif key == "threat":
            if not tokens:
                raise ScenarioSyntaxError(lineno, "'threat' needs a kind")
            try:
                kind = ThreatKind(tokens[0])
            except ValueError:
                raise ScenarioSyntaxError(lineno, f"unknown threat kind {tokens[0]!r}") from None
            cx, cy, r = _numbers(tokens[1:], 3, lineno, key)
            if r <= 0:
                raise ValidationError(f"threat {len(threats)} has non-positive radius {r}")
            threats.append(Threat(Point(cx, cy), r, kind))
        else:
            raise ScenarioSyntaxError(lineno, f"unknown key {key!r}")
    missing = [k for k in HEADER_KEYS if k not in header]
    if missing:
        raise ScenarioSyntaxError(0, f"missing required key(s): {', '.join(missing)}")
    return Scenario(header["scenario"], header["bounds"], header["start"], header["goal"], tuple(threats)).validate()


def _fmt(v: float) -> str:
    return format(v, ".6g")


def serialize_scenario(s: Scenario) -> str:
    b = s.bounds
    lines = [
        f"scenario {s.name}",
        f"bounds {_fmt(b.x_min)} {_fmt(b.y_min)} {_fmt(b.x_max)} {_fmt(b.y_max)}",
        f"start {_fmt(s.start.x)} {_fmt(s.start.y)}",
        f"goal {_fmt(s.goal.x)} {_fmt(s.goal.y)}",
    ]
    for t in s.threats:
        lines.append(f"threat {t.kind.value} {_fmt(t.center.x)} {_fmt(t.center.y)} {_fmt(t.radius)}")
    return "\n".join(lines) + "\n"


# -- generators --------------------------------------------------------------

def _round6(v: float) -> float:
    # generated values survive a serialize/parse round trip unchanged
    return float(_fmt(v))


def _class_index(cls: ComplexityClass) -> int:
    return list(ComplexityClass).index(cls)


def generate_scenario(cls, seed: int) -> Scenario:
    """Seeded random scenario of the given complexity class.

    Threat centers are rejection-sampled inside a corridor around the
    start-goal line.  A whole threat set is redrawn until the start and goal
    are clear and the grid oracle (resolution 1) finds a path.
    """
    from .oracle import GridSpec, grid_shortest_path

    if isinstance(cls, str):
        cls = ComplexityClass.parse(cls)
    n_radar, n_art = C.THREAT_COUNTS[cls.value]
    x_min, x_max, y_min, y_max = C.WORLD_BOUNDS
    bounds = Bounds(x_min, x_max, y_min, y_max)
    start, goal = Point(*C.GEN_START), Point(*C.GEN_GOAL)
    rng = np.random.default_rng(np.random.SeedSequence([int(seed), _class_index(cls)]))
    base = Scenario(f"{cls.value}-{int(seed)}", bounds, start, goal)
    kinds = [ThreatKind.RADAR] * n_radar + [ThreatKind.ARTILLERY] * n_art

    attempts = 0

    def draw(kind):
        nonlocal attempts
        lo, hi = C.RADAR_RADIUS_RANGE if kind is ThreatKind.RADAR else C.ARTILLERY_RADIUS_RANGE
        while attempts < C.GEN_MAX_ATTEMPTS:
            attempts += 1
            cx, cy = rng.uniform([x_min, y_min], [x_max, y_max])
            r = rng.uniform(lo, hi)
            t = Threat(Point(_round6(cx), _round6(cy)), _round6(r), kind)
            if _corridor_distance(t.center, start, goal) > C.CORRIDOR_HALF_WIDTH:
                continue
            if distance(start, t.center) <= t.radius or distance(goal, t.center) <= t.radius:
                continue
            return t
        return None

    while attempts < C.GEN_MAX_ATTEMPTS:
        threats = []
        for kind in kinds:
            t = draw(kind)
            if t is None:
                break
            threats.append(t)
        else:
            scenario = base.with_threats(threats).validate()
            try:
                grid_shortest_path(scenario, GridSpec(C.GEN_ORACLE_RESOLUTION))
            except NoPath:
                attempts += 1
                continue
            return scenario
    raise GenerationFailed(f"no valid {cls.value} scenario for seed {seed} after {C.GEN_MAX_ATTEMPTS} attempts")


def _corridor_distance(p, a, b) -> float:
    ax, ay = a
    dx, dy = b[0] - ax, b[1] - ay
    s = ((p[0] - ax) * dx + (p[1] - ay) * dy) / (dx * dx + dy * dy)
    s = min(1.0, max(0.0, s))
    return math.hypot(p[0] - (ax + s * dx), p[1] - (ay + s * dy))
