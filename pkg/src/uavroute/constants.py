"""Tunable numbers in one place.

Generator values are reproducible stand-ins for the three complexity
classes; retune here and nowhere else.
"""

# -- generator -------------------------------------------------------------
WORLD_BOUNDS = (0.0, 100.0, 0.0, 100.0)  # x_min, x_max, y_min, y_max
GEN_START = (5.0, 5.0)
GEN_GOAL = (95.0, 95.0)
CORRIDOR_HALF_WIDTH = 35.0
RADAR_RADIUS_RANGE = (6.0, 12.0)
ARTILLERY_RADIUS_RANGE = (3.0, 5.0)
# (radar, artillery) counts per complexity class
THREAT_COUNTS = {
    "low": (3, 2),
    "medium": (5, 5),
    "high": (8, 8),
}
GEN_MAX_ATTEMPTS = 10_000
GEN_ORACLE_RESOLUTION = 1.0

# -- cost ------------------------------------------------------------------
W_THREAT = 1000.0
W_BOUNDS = 1000.0
SAMPLES_PER_SEGMENT = 64

# -- swarm -----------------------------------------------------------------
SWARM_SIZE = 40
ITERATIONS = 300
INERTIA = 0.7298
COGNITIVE = 1.49618
SOCIAL = 1.49618
V_MAX_FRACTION = 0.2
N_WAYPOINTS = 8

# -- oracle ----------------------------------------------------------------
ORACLE_RESOLUTION = 0.5
