"""
Minimal stable sets: top cycle, minimal covering set, minimal extending set
===========================================================================

A set is externally S-stable when no outsider would be chosen by S if it were
added to the set alone.  Minimal such sets refine S.
"""

from tournament_solutions import fixtures
from tournament_solutions.stable import (
    dominant_sets,
    externally_stable_sets,
    is_internally_stable,
    minimal_covering_set,
    minimal_extending_set,
    minimal_stable_sets,
    top_cycle,
)

f1 = fixtures.load("F1")
print("F1 top cycle:", sorted(a + 1 for a in top_cycle(f1)))
print("F1 MC:", sorted(a + 1 for a in minimal_covering_set(f1)))
me = minimal_extending_set(f1)
print("F1 minimal extending sets:", [sorted(a + 1 for a in b) for b in me.sets], "unique:", me.unique)

# the minimal UC-stable sets, computed by the generic search, give MC
print(minimal_stable_sets("UC", f1).describe())

# dominant sets are nested; the smallest is the top cycle
f2 = fixtures.load("F2")
print("F2 dominant sets:", [sorted(a + 1 for a in d) for d in dominant_sets(f2)])

# Copeland has no internally and externally stable set on F3
f3 = fixtures.load("F3")
ext = externally_stable_sets("CO", f3)
print(f"F3: {len(ext)} externally CO-stable sets")
for b in ext:
    print("  ", sorted(a + 1 for a in b), "internally stable:", is_internally_stable("CO", f3, b))
