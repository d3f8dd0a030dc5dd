"""
Convergence over many seeds
===========================

Run every complexity class over several seeds and compare the final path
lengths and how quickly each run settles.  A PNG of the median curves is
written when matplotlib is installed.
"""
import statistics
from pathlib import Path

import numpy as np

from uavroute import PsoConfig, generate_scenario, optimize
from uavroute.pso import iterations_to_within

N_SEEDS = 5
out = Path(__file__).with_name("output")
out.mkdir(exist_ok=True)

curves = {}
for cls in ("low", "medium", "high"):
    lengths, settle, hist = [], [], []
    for seed in range(N_SEEDS):
        report = optimize(generate_scenario(cls, seed), config=PsoConfig(seed=seed))
        lengths.append(report.best_breakdown.length)
        settle.append(iterations_to_within(report.history, 0.01))
        hist.append([h.best_length for h in report.history])
    curves[cls] = np.median(np.array(hist), axis=0)
    print(f"{cls:6s} median length {statistics.median(lengths):7.2f}   "
          f"median iterations to within 1% {statistics.median(settle):5.1f}")

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, ax = plt.subplots(figsize=(6, 4))
    for cls, curve in curves.items():
        ax.plot(curve, label=cls)
    ax.set_xlabel("iteration")
    ax.set_ylabel("best path length")
    ax.set_ylim(top=min(c[0] for c in curves.values()))
    ax.legend()
    fig.tight_layout()
    fig.savefig(out / "convergence.png", dpi=120)
    print("wrote", out / "convergence.png")
