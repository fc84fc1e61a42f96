"""Annular cheeses: the same game with a concentric hole.

Holes touching the central hole get absorbed by enlarging it; holes touching
the rim shrink the outer radius. Neither radius moves by more than twice the
total hole radius.

Run: python3 demos/03_annular.py
"""

from swisscheese import cheese as ch
from swisscheese.classicalise import annular_classicalise
from swisscheese.construct import random_annular_cheese
from swisscheese.geometry import Disk
from swisscheese.cheese import Cheese

small = Cheese(Disk((0, 0), 4), (Disk((1.2, 0), 0.3),), Disk((0, 0), 1))
b, rep = annular_classicalise(small)
print("a single hole grazing the central hole:")
print(f"  central hole {small.hole.radius} -> {b.hole.radius}, annular delta {rep.annular_delta_before} -> {rep.annular_delta_after}")

print("\nrandom annular cheeses:")
for seed in range(5):
    a = random_annular_cheese(seed, 60, 0.6)
    b, rep = annular_classicalise(a)
    lo0, hi0 = rep.bounds["outer_radius_range"]
    lo1, hi1 = rep.bounds["hole_radius_range"]
    print(
        f"  seed {seed}: {len(rep.steps):>3} steps, outer {b.outer.radius:.4f} in [{lo0:.4f}, {hi0:.4f}],"
        f" hole {b.hole.radius:.4f} in [{lo1:.4f}, {hi1:.4f}], classical={ch.is_classical(b)}"
    )
