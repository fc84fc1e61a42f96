"""Classicalise a crowded random cheese and watch the budget.

Each rewrite either merges two colliding holes into their covering disk or
shrinks the outer disk away from a hole that pokes through its rim. The first
discrepancy never goes down, and the new set sits inside the old one.

Run: python3 demos/02_plain_classicalisation.py [seed]
"""

import sys
from collections import Counter

from swisscheese import cheese as ch
from swisscheese.classicalise import classicalise, error_set
from swisscheese.construct import random_cheese
from swisscheese.oracle import SampleConfig, containment_check

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 3
a = random_cheese(seed, 120, overlap_bias=0.8)
es = error_set(a)
print(f"input: {len(a.inner)} holes, delta_1 = {ch.delta(a, 1):.6f}, classical = {ch.is_classical(a)}")
print(f"  {len(es.pair_violations)} colliding pairs, {len(es.boundary_violations)} holes crossing the rim")

b, rep = classicalise(a)
kinds = Counter(s.kind for s in rep.steps)
print(f"\n{len(rep.steps)} steps: {dict(kinds)}; {rep.redundant_removed} redundant holes dropped first")
for s in rep.steps[:5]:
    print(f"  {s.kind:<8} on {s.indices}: delta_1 -> {s.delta1:.6f}, delta_2 -> {s.delta2:.6f}")
if len(rep.steps) > 5:
    print("  ...")

print(f"\noutput: {len(b.inner)} holes, delta_1 = {ch.delta(b, 1):.6f}, classical = {ch.is_classical(b)}")
print(f"outer disk now {b.outer}")
res = containment_check(b, a, SampleConfig(100_000, seed))
print(f"new set inside old set at 100000 sampled points: {res.ok}")
