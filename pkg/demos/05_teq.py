"""
Tournament equilibrium set
==========================

TEQ is defined recursively: a points to b when a is in TEQ of b's dominators.
The naive recursion and the seeded variant (which only explores what the
Copeland winners drag in) must agree.
"""

import random
import time

from tournament_solutions import Tournament, fixtures
from tournament_solutions.teq import TeqCache, minimal_retentive_sets, teq, teq_relation

f2 = fixtures.load("F2")
print("TEQ(F2):", sorted(a + 1 for a in teq(f2)))
rel = teq_relation(f2)
print("TEQ relation of F2 (1-based):", sorted((a + 1, b + 1) for a, b in rel.pairs()))
print(minimal_retentive_sets("TEQ", f2).describe())

rng = random.Random(1)
t = Tournament.random(14, rng)
for mode in ("naive", "seeded"):
    cache = TeqCache()
    start = time.perf_counter()
    result = teq(t, mode, cache)
    print(f"{mode:6s}: {sorted(result)} in {time.perf_counter() - start:.3f}s, {len(cache)} memo entries")
