"""Two extremal disks, side by side with their brute-force counterparts.

Run: python3 demos/01_combine_and_pull_in.py
"""

from swisscheese.geometry import Disk, combine_disks, pull_in_disk
from swisscheese.oracle import brute_max_avoiding, brute_min_enclosing


def show(label, fast, slow):
    gap = abs(fast.radius - slow.radius)
    print(f"  {label:<28} closed form r={fast.radius:.12f}  search r={slow.radius:.12f}  gap={gap:.1e}")


print("Smallest disk covering two disks:")
for a, b in [
    (Disk((-1.25, 0), 1.5), Disk((1.25, 0), 1.0)),  # tangent: radius is exactly the sum
    (Disk((-0.5, 0), 1.5), Disk((1.5, 0.5), 1.25)),  # overlapping: strictly less than the sum
    (Disk((0, 0), 2), Disk((0.5, 0), 1)),  # nested: the larger disk comes back
]:
    show(f"r1+r2={a.radius + b.radius:g}", combine_disks(a, b), brute_min_enclosing(a, b))

print("\nLargest disk inside `outer` avoiding an obstacle that reaches its rim:")
for outer, obs in [
    (Disk((-1, 0), 2.35), Disk((0.5, 0), 0.85)),  # internally tangent: radius is r1 - r2
    (Disk((0, 0), 2), Disk((2, 0), 1)),  # crossing: strictly more than r1 - r2
]:
    show(f"r1-r2={outer.radius - obs.radius:g}", pull_in_disk(outer, obs), brute_max_avoiding(outer, obs))
