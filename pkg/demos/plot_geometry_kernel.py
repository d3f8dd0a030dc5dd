"""
Clearance and penetration along a segment
=========================================

A path segment is scored against a circular threat in two ways: the signed
clearance (how far the segment stays outside the disc) and the sampled
penetration integral that the cost function penalizes.
"""
import math

from uavroute import Point, Threat, segment_clearance, segment_violation

threat = Threat(Point(0.0, 0.0), 1.0)

# Three segments: through the center, tangent, and well clear.
for a, b in [((-2, 0), (2, 0)), ((-2, 1), (2, 1)), ((0, 3), (4, 3))]:
    print(f"{a} -> {b}: clearance {segment_clearance(a, b, threat):+.3f}, "
          f"violation {segment_violation(a, b, threat):.4f}")

# The diameter integral of sqrt(r^2 - d^2) is pi/2 for a unit disc.  Watch
# the sampled estimate approach it as the sample count grows.
for n in (8, 16, 64, 256, 1025):
    v = segment_violation((-2, 0), (2, 0), threat, samples=n)
    print(f"samples={n:5d}  estimate={v:.5f}  error={abs(v - math.pi / 2) / (math.pi / 2):.3%}")
