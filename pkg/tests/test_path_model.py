import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from uavroute import Bounds, DimensionMismatch, EncodingSpec, Path, Point, decode, distance, encode, path_length

BOX = Bounds(0, 10, 0, 10)
coord = st.floats(-1e3, 1e3, allow_nan=False)
pt = st.tuples(coord, coord)


def test_spec_requires_a_waypoint():
    with pytest.raises(DimensionMismatch):
        EncodingSpec(0, BOX)


def test_decode_single_waypoint():
    p = decode([5, 5], EncodingSpec(1, BOX), (0, 0), (10, 10))
    assert p.vertices == [Point(0, 0), Point(5, 5), Point(10, 10)]


def test_decode_preserves_order():
    p = decode([1, 2, 3, 4], EncodingSpec(2, BOX), (0, 0), (10, 0))
    assert p.vertices == [(0, 0), (1, 2), (3, 4), (10, 0)]
    assert len(p) == 4


def test_decode_does_not_clamp():
    p = decode([-50, 200], EncodingSpec(1, BOX), (0, 0), (10, 10))
    assert p.interior == (Point(-50, 200),)


@pytest.mark.parametrize("vec", [[], [1], [1, 2, 3]])
def test_decode_dimension_mismatch(vec):
    with pytest.raises(DimensionMismatch):
        decode(vec, EncodingSpec(1, BOX), (0, 0), (1, 1))


@pytest.mark.parametrize("vertices, expected", [
    ([(0, 0), (10, 0)], 10.0),
    ([(0, 0), (5, 0), (10, 0)], 10.0),
    ([(0, 0), (3, 0), (3, 4)], 7.0),
])
def test_path_length_examples(vertices, expected):
    p = Path(vertices[0], vertices[-1], tuple(vertices[1:-1]))
    assert path_length(p) == expected


@given(st.lists(coord, min_size=2, max_size=20).filter(lambda v: len(v) % 2 == 0))
def test_encode_decode_roundtrip(vec):
    spec = EncodingSpec(len(vec) // 2, BOX)
    assert np.array_equal(encode(decode(vec, spec, (0, 0), (1, 1))), np.asarray(vec, dtype=float))


@given(pt, pt, st.lists(pt, max_size=10))
def test_triangle_inequality(s, g, interior):
    p = Path(s, g, tuple(interior))
    d = distance(s, g)
    assert path_length(p) >= d * (1 - 1e-12)


@given(pt, pt, st.lists(pt, max_size=10), pt)
def test_length_translation_invariant(s, g, interior, shift):
    dx, dy = shift
    moved = Path((s[0] + dx, s[1] + dy), (g[0] + dx, g[1] + dy), tuple((x + dx, y + dy) for x, y in interior))
    assert path_length(moved) == pytest.approx(path_length(Path(s, g, tuple(interior))), rel=1e-9, abs=1e-9)


def test_spec_box_layout():
    spec = EncodingSpec(3, Bounds(-1, 2, -3, 4))
    assert spec.dimension == 6
    assert list(spec.lower()) == [-1, -3] * 3
    assert list(spec.upper()) == [2, 4] * 3
