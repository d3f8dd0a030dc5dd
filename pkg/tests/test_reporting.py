import xml.etree.ElementTree as ET

import pytest
from hypothesis import given
from hypothesis import strategies as st

from uavroute import EmptyHistory, EndpointMismatch, Path, generate_scenario, read_convergence_csv, render_svg, write_convergence_csv
from uavroute.pso import HistoryEntry

SVG = "{http://www.w3.org/2000/svg}"


def census(svg_text):
    root = ET.fromstring(svg_text.encode("utf-8"))
    circles = root.findall(f"{SVG}circle")
    polylines = root.findall(f"{SVG}polyline")
    return root, circles, polylines


def test_empty_scenario_census(empty_world):
    _, circles, polylines = census(render_svg(empty_world, Path(empty_world.start, empty_world.goal)))
    assert len(circles) == 2
    assert len(polylines) == 1
    assert len(polylines[0].get("points").split()) == 2


def test_low_scenario_census_and_styles():
    s = generate_scenario("low", 4)
    path = Path(s.start, s.goal, ((20, 60), (60, 80)))
    root, circles, polylines = census(render_svg(s, path))
    assert root.get("width") == "800" and root.get("height") == "800"
    assert len(circles) == 5 + 2
    assert len(polylines[0].get("points").split()) == 4
    assert polylines[0].get("stroke") == "black" and polylines[0].get("stroke-dasharray") == "6,4"
    by_class = {c.get("class"): c for c in circles}
    assert by_class["start"].get("fill") == "red"
    assert by_class["goal"].get("fill") == "blue"
    threats = [c for c in circles if c.get("class").startswith("threat")]
    assert all(c.get("fill") == "none" for c in threats)
    radar = [float(c.get("r")) for c in threats if "radar" in c.get("class")]
    art = [float(c.get("r")) for c in threats if "artillery" in c.get("class")]
    assert min(radar) > max(art)


def test_viewport_mapping_keeps_aspect(single_threat):
    svg = render_svg(single_threat, Path(single_threat.start, single_threat.goal))
    _, circles, poly = census(svg)
    (x0, y0), (x1, y1) = (tuple(map(float, p.split(","))) for p in poly[0].get("points").split())
    # bounds span 120 x 120 with 5% margins -> 132 world units across 800 px
    scale = 800 / 132
    assert x1 - x0 == pytest.approx(100 * scale, abs=1e-2)
    assert y0 == pytest.approx(y1) == pytest.approx(400, abs=1e-2)
    threat = next(c for c in circles if "threat" in c.get("class"))
    assert float(threat.get("r")) == pytest.approx(10 * scale, abs=1e-2)


def test_render_is_byte_identical():
    s = generate_scenario("high", 2)
    p = Path(s.start, s.goal, ((40, 30),))
    assert render_svg(s, p) == render_svg(s, p)


def test_render_endpoint_mismatch(empty_world):
    with pytest.raises(EndpointMismatch):
        render_svg(empty_world, Path((0, 0), empty_world.goal))


def test_csv_single_entry():
    text = write_convergence_csv([HistoryEntry(0, 12.5, 12.5)])
    assert text == "iteration,best_total,best_length\n0,12.5,12.5\n"


def test_csv_row_count_and_lf():
    history = [HistoryEntry(i, 1000.0 / (i + 1) + 100, 100 + 1 / (i + 1)) for i in range(301)]
    text = write_convergence_csv(history)
    assert "\r" not in text
    assert len(text.splitlines()) == 302
    totals = [row[1] for row in read_convergence_csv(text)]
    assert all(b <= a for a, b in zip(totals, totals[1:]))


def test_csv_empty_history():
    with pytest.raises(EmptyHistory):
        write_convergence_csv([])


@given(st.lists(st.tuples(st.floats(1e-3, 1e9), st.floats(1e-3, 1e9)), min_size=1, max_size=50))
def test_csv_round_trip_six_significant_digits(values):
    history = [HistoryEntry(i, t, l) for i, (t, l) in enumerate(values)]
    back = read_convergence_csv(write_convergence_csv(history))
    assert [r[0] for r in back] == list(range(len(values)))
    for (_, t, l), (_, t2, l2) in zip(history, back):
        assert t2 == pytest.approx(t, rel=5e-6)
        assert l2 == pytest.approx(l, rel=5e-6)
        assert t2 == float(f"{t:.6g}") and l2 == float(f"{l:.6g}")
