import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate

from uavroute.geometry import (
    Bounds,
    Point,
    Threat,
    ThreatKind,
    clearance_matrix,
    distance,
    segment_clearance,
    segment_violation,
    violation_matrix,
)

coord = st.floats(-100, 100, allow_nan=False)
points = st.tuples(coord, coord)
radius = st.floats(0.5, 30)


def unit_threat(cx=0.0, cy=0.0, r=1.0):
    return Threat(Point(cx, cy), r)


def brute_clearance(a, b, t, n=200_001):
    """Minimum distance to densely sampled segment points minus the radius."""
    s = np.linspace(0, 1, n)[:, None]
    pts = np.asarray(a) + s * (np.asarray(b) - np.asarray(a))
    return np.hypot(*(pts - np.asarray(t.center)).T).min() - t.radius


@pytest.mark.parametrize("p, q, expected", [
    ((0, 0), (0, 0), 0.0),
    ((0, 0), (3, 4), 5.0),
    ((1, 1), (1, 9), 8.0),
])
def test_distance_examples(p, q, expected):
    assert distance(p, q) == expected


@given(points, points)
def test_distance_symmetric(p, q):
    assert distance(p, q) == distance(q, p)


@pytest.mark.parametrize("a, b, expected", [
    ((-2, 0), (2, 0), -1.0),
    ((-2, 1), (2, 1), 0.0),
    ((0, 3), (4, 3), 2.0),
])
def test_segment_clearance_examples(a, b, expected):
    assert segment_clearance(a, b, unit_threat()) == pytest.approx(expected, abs=1e-12)


def test_clearance_matches_dense_sampling():
    rng = np.random.default_rng(3)
    for _ in range(50):
        a, b, c = rng.uniform(-20, 20, (3, 2))
        t = unit_threat(*c, r=rng.uniform(1, 8))
        assert segment_clearance(a, b, t) == pytest.approx(brute_clearance(a, b, t), abs=1e-3)


@given(points, points, points, radius)
def test_clearance_symmetric(a, b, c, r):
    t = unit_threat(*c, r=r)
    assert segment_clearance(a, b, t) == segment_clearance(b, a, t)


@given(points, points, radius)
def test_degenerate_segment_clearance(a, c, r):
    t = unit_threat(*c, r=r)
    assert segment_clearance(a, a, t) == pytest.approx(distance(a, c) - r, rel=1e-12, abs=1e-12)


def test_violation_examples():
    t = unit_threat()
    assert segment_violation((0, 3), (4, 3), t, samples=16) == 0.0
    for n in (2, 16, 1025):
        assert segment_violation((0, 0), (0, 0), t, samples=n) == 0.0


def test_violation_diameter_against_quadrature():
    analytic, _ = integrate.quad(lambda x: math.sqrt(1 - x * x), -1, 1)
    assert analytic == pytest.approx(math.pi / 2, rel=1e-9)
    got = segment_violation((-2, 0), (2, 0), unit_threat(), samples=1025)
    assert got == pytest.approx(analytic, rel=0.01)


def test_violation_rejects_single_sample():
    with pytest.raises(ValueError):
        segment_violation((0, 0), (1, 1), unit_threat(), samples=1)


@given(points, points, points, radius)
def test_violation_nonnegative_and_zero_when_clear(a, b, c, r):
    t = unit_threat(*c, r=r)
    v = segment_violation(a, b, t)
    assert v >= 0.0
    if segment_clearance(a, b, t) >= 0:
        assert v == 0.0


def test_violation_converges_with_samples():
    # Segments local to the threat (endpoints within 2 radii of the center)
    # that cut at least a quarter radius deep.  Grazing chords on long
    # segments are undersampled at any fixed count and are excluded.
    rng = np.random.default_rng(11)
    cases = 0
    while cases < 200:
        c = rng.uniform(-50, 50, 2)
        r = rng.uniform(3, 15)
        a, b = c + rng.uniform(-2 * r, 2 * r, (2, 2))
        t = unit_threat(*c, r=r)
        if segment_clearance(a, b, t) > -0.25 * r:
            continue
        cases += 1
        coarse = segment_violation(a, b, t, samples=512)
        fine = segment_violation(a, b, t, samples=1024)
        assert abs(coarse - fine) / fine < 0.005


@settings(max_examples=200)
@given(points, points, points, radius, points)
def test_translation_invariance(a, b, c, r, shift):
    t = unit_threat(*c, r=r)
    dx, dy = shift
    moved = t.translated(dx, dy)
    a2, b2 = (a[0] + dx, a[1] + dy), (b[0] + dx, b[1] + dy)
    c0, c1 = segment_clearance(a, b, t), segment_clearance(a2, b2, moved)
    scale = max(1.0, abs(dx), abs(dy), *map(abs, a), *map(abs, b), *map(abs, c))
    assert abs(c0 - c1) <= 1e-9 * scale
    v0, v1 = segment_violation(a, b, t), segment_violation(a2, b2, moved)
    if v0 > 1e-3 and c0 < -1e-6 * scale:
        assert v1 == pytest.approx(v0, rel=1e-6)


def test_matrix_kernels_agree_with_scalar_calls():
    rng = np.random.default_rng(5)
    a = rng.uniform(0, 100, (9, 2))
    b = rng.uniform(0, 100, (9, 2))
    centers = rng.uniform(0, 100, (6, 2))
    radii = rng.uniform(3, 12, 6)
    C = clearance_matrix(a, b, centers, radii)
    V = violation_matrix(a, b, centers, radii)
    for i in range(9):
        for j in range(6):
            t = Threat(Point(*centers[j]), radii[j])
            assert C[i, j] == segment_clearance(a[i], b[i], t)
            assert V[i, j] == segment_violation(a[i], b[i], t)


def test_threat_and_bounds_validation():
    with pytest.raises(ValueError):
        Threat(Point(0, 0), 0.0)
    with pytest.raises(ValueError):
        Threat(Point(0, 0), -1.0)
    with pytest.raises(ValueError):
        Bounds(1, 1, 0, 1)
    with pytest.raises(ValueError):
        Bounds(0, 1, 2, 1)
    assert Threat(Point(0, 0), 1.0, ThreatKind.ARTILLERY).contains(Point(0.5, 0))
    assert not Threat(Point(0, 0), 1.0).contains(Point(1, 0))
