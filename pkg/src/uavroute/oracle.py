"""Grid shortest-path planner used as an independent reference.

Nodes sit on the lattice ``(x_min + i*res, y_min + j*res)`` spanning the
bounds; each node is the center of one grid cell.  A node is blocked when it
lies strictly inside a threat disc.  Uniform-cost search over the 8-connected
free nodes gives the reference path.
"""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

import numpy as np

from .errors import GoalBlocked, NoPath, StartBlocked
from .path_model import Path, path_length

SQRT2 = math.sqrt(2.0)

# E, NE, N, NW, W, SW, S, SE
NEIGHBORS = ((1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1))


@dataclass(frozen=True)
class GridSpec:
    resolution: float
    connectivity: int = 8

    def __post_init__(self):
        if not (math.isfinite(self.resolution) and self.resolution > 0):
            raise ValueError(f"resolution must be > 0, got {self.resolution!r}")
        if self.connectivity != 8:
            raise ValueError("only 8-connectivity is supported")


@dataclass(frozen=True)
class Grid:
    x0: float
    y0: float
    resolution: float
    blocked: np.ndarray  # (nx, ny) bool, indexed [i, j]

    @property
    def shape(self):
        return self.blocked.shape

    def node_xy(self, i, j):
        return (self.x0 + i * self.resolution, self.y0 + j * self.resolution)

    def snap(self, p):
        nx, ny = self.shape
        i = math.floor((p[0] - self.x0) / self.resolution + 0.5)
        j = math.floor((p[1] - self.y0) / self.resolution + 0.5)
        return min(max(i, 0), nx - 1), min(max(j, 0), ny - 1)


def build_grid(scenario, spec: GridSpec) -> Grid:
    b = scenario.bounds
    res = spec.resolution
    nx = int(math.floor(b.width / res + 1e-9)) + 1
    ny = int(math.floor(b.height / res + 1e-9)) + 1
    xs = b.x_min + np.arange(nx) * res
    ys = b.y_min + np.arange(ny) * res
    X, Y = np.meshgrid(xs, ys, indexing="ij")
    blocked = np.zeros((nx, ny), dtype=bool)
    for t in scenario.threats:
        cx, cy = t.center
        blocked |= (X - cx) ** 2 + (Y - cy) ** 2 < t.radius ** 2
    return Grid(b.x_min, b.y_min, res, blocked)


def grid_shortest_path(scenario, spec: GridSpec):
    """Shortest 8-connected grid path between the scenario endpoints.

    Returns
    -------
    (Path, float)
        The node polyline, with the snapped first and last nodes replaced by
        the true start and goal, and its length.

    Raises
    ------
    StartBlocked, GoalBlocked
        An endpoint's node lies inside a threat.
    NoPath
        The goal node is unreachable.
    """
    grid = build_grid(scenario, spec)
    nx, ny = grid.shape
    blocked = grid.blocked.ravel().tolist()
    si, sj = grid.snap(scenario.start)
    gi, gj = grid.snap(scenario.goal)
    if grid.blocked[si, sj]:
        raise StartBlocked(f"start node {grid.node_xy(si, sj)} is inside a threat")
    if grid.blocked[gi, gj]:
        raise GoalBlocked(f"goal node {grid.node_xy(gi, gj)} is inside a threat")

    res = spec.resolution
    steps = [(di, dj, res * (SQRT2 if di and dj else 1.0)) for di, dj in NEIGHBORS]
    src = si * ny + sj
    dst = gi * ny + gj
    dist = {src: 0.0}
    parent = {src: -1}
    done = set()
    # flat index k = i*ny + j orders ties lexicographically by (i, j)
    heap = [(0.0, src)]
    while heap:
        d, k = heapq.heappop(heap)
        if k in done:
            continue
        done.add(k)
        if k == dst:
            break
        i, j = divmod(k, ny)
        for di, dj, w in steps:
            ni, nj = i + di, j + dj
            if not (0 <= ni < nx and 0 <= nj < ny):
                continue
            nk = ni * ny + nj
            if blocked[nk] or nk in done:
                continue
            nd = d + w
            if nd < dist.get(nk, math.inf):
                dist[nk] = nd
                parent[nk] = k
                heapq.heappush(heap, (nd, nk))
    if dst not in done:
        raise NoPath(f"goal unreachable at resolution {res}")

    nodes = []
    k = dst
    while k != -1:
        nodes.append(divmod(k, ny))
        k = parent[k]
    nodes.reverse()
    interior = [grid.node_xy(i, j) for i, j in nodes[1:-1]]
    path = Path(scenario.start, scenario.goal, tuple(interior))
    return path, path_length(path)


def octile_lower_bound(start, goal) -> float:
    dx = abs(goal[0] - start[0])
    dy = abs(goal[1] - start[1])
    return max(dx, dy) + (SQRT2 - 1.0) * min(dx, dy)
