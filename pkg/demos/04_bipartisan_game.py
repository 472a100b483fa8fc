"""
The tournament game and the bipartisan set
==========================================

Each player picks an alternative; the one whose alternative dominates wins one
unit.  The unique equilibrium is found exactly, so its support is exact too.
"""

from tournament_solutions import fixtures, Tournament
from tournament_solutions.game import bipartisan, equilibrium, tournament_game, verify_equilibrium

for name in fixtures.NAMES:
    t = fixtures.load(name)
    s = equilibrium(t)
    print(f"{name}: BP={sorted(a + 1 for a in bipartisan(t))}")
    print("   strategy:", s.serialize())
    print("   certified:", verify_equilibrium(tournament_game(t), s))

# a regular tournament on 7 alternatives: every pure strategy is equally good
t = Tournament.circulant(7, [1, 2, 4])
print("circulant(7) equilibrium:", equilibrium(t).serialize())
