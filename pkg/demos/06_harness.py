"""
Verification harness
====================

Inclusions between solutions, axiom checks with replayable witnesses, small
sweeps, and the strong-stability example.
"""

from tournament_solutions import fixtures
from tournament_solutions.lab import check_inclusions, find_witness, parse_witnesses, strong_stability_demo, sweep

for name in fixtures.NAMES:
    rep = check_inclusions(fixtures.load(name))
    print(name, "hard ok:", rep.hard_ok, "violations:", rep.violations())

# Copeland fails the weak superset property; the search finds a smallest case
w = find_witness("axiom:CO:WSP", (1, 6))
print(w.serialize())
print("replays:", parse_witnesses(w.serialize())[0].replay())

report = sweep((1, 5), checks=["inclusions", "me-unique", "teq-unique", "axiom:UC:IUA"])
print(report.body())

for line in strong_stability_demo().lines():
    print(line)
