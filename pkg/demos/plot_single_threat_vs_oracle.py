"""
Swarm planner versus the grid oracle
====================================

One radius-10 threat sits on the midpoint of a 100-unit flight.  The swarm
bends the path around it; the 8-connected grid planner gives a reference
length.  The grid is limited to 45 degree headings, so the swarm can come in
a few percent shorter.
"""
import math
from pathlib import Path

from uavroute import (
    Bounds, GridSpec, Point, PsoConfig, Scenario, Threat, grid_shortest_path, optimize, render_svg,
)

out = Path(__file__).with_name("output")
out.mkdir(exist_ok=True)

scenario = Scenario(
    "single-threat", Bounds(-10, 110, -60, 60), (0, 0), (100, 0), (Threat(Point(50, 0), 10.0),)
).validate()

grid_path, grid_len = grid_shortest_path(scenario, GridSpec(0.5))

# The continuous optimum is two tangent lines plus the arc between them.
d, r = 50.0, 10.0
exact = 2 * math.sqrt(d * d - r * r) + r * (math.pi - 2 * math.acos(r / d))

for seed in range(3):
    report = optimize(scenario, config=PsoConfig(seed=seed))
    length = report.best_breakdown.length
    print(f"seed {seed}: swarm {length:.3f}  grid {grid_len:.3f}  ratio {length / grid_len:.4f}  "
          f"tangent-arc optimum {exact:.3f}  feasible={report.feasible}")

(out / "single_threat_swarm.svg").write_text(render_svg(scenario, report.best_path))
(out / "single_threat_grid.svg").write_text(render_svg(scenario, grid_path))
print("wrote", out / "single_threat_swarm.svg", "and", out / "single_threat_grid.svg")
