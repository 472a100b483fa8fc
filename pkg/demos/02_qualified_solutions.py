"""
Condorcet non-losers, Copeland, uncovered set and Banks set
===========================================================
"""

from tournament_solutions import fixtures
from tournament_solutions.bits import format_set
from tournament_solutions.qualified import (
    banks,
    banks_element,
    cnl,
    copeland,
    covering_relation,
    iterated_uncovered,
    uncovered,
    uncovered_by_covering,
    uncovered_by_matrix,
    uncovered_mask,
)
from tournament_solutions.bits import to_mask

show = lambda s: format_set(to_mask(s))

for name in fixtures.NAMES:
    t = fixtures.load(name)
    scores, co = copeland(t)
    print(f"{name}: scores={scores}")
    print("  CNL", show(cnl(t)), " CO", show(co), " UC", show(uncovered(t)),
          " UCinf", show(iterated_uncovered(t)), " BA", show(banks(t)))

# the uncovered set three ways: kings, the covering relation, and M^2 + M
f2 = fixtures.load("F2")
m = f2.full
print("UC agree:", uncovered_mask(f2, m) == uncovered_by_covering(f2, m) == uncovered_by_matrix(f2, m))
print("covering pairs in F2 (1-based):", [(a + 1, b + 1) for a, b in covering_relation(f2).pairs()])

# one Banks member per seed, found greedily without the exponential search
print("Banks elements of F2 by seed:", [banks_element(f2, s) + 1 for s in range(10)])
