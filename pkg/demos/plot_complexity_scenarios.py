"""
Planning through low, medium and high threat density
====================================================

Generate one scenario of each complexity class, plan a path through each,
and write the path plot and convergence history next to this script.
"""
from pathlib import Path

from uavroute import PsoConfig, generate_scenario, optimize, render_svg, serialize_scenario, write_convergence_csv

out = Path(__file__).with_name("output")
out.mkdir(exist_ok=True)

for cls in ("low", "medium", "high"):
    scenario = generate_scenario(cls, seed=1)
    report = optimize(scenario, config=PsoConfig(seed=1))
    b = report.best_breakdown
    print(f"{cls:6s} threats={len(scenario.threats):2d} length={b.length:7.2f} "
          f"total={b.total:9.2f} feasible={report.feasible} ({report.wall_time:.1f} s)")
    (out / f"scenario_{cls}.txt").write_text(serialize_scenario(scenario))
    (out / f"path_{cls}.svg").write_text(render_svg(scenario, report.best_path))
    (out / f"convergence_{cls}.csv").write_text(write_convergence_csv(report.history))
