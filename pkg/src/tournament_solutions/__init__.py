"""Tournament solutions.

Solvers for the Condorcet non-losers, Copeland set, uncovered set, Banks set,
top cycle, minimal covering set, minimal extending set, bipartisan set and
tournament equilibrium set, plus a harness that checks their inclusions and
axioms over exhaustive or sampled families of tournaments.

Alternatives are ``0..n-1`` throughout the library; the CLI prints them 1-based.
"""

from .core import (
    Decomposition,
    PreferenceProfile,
    Tournament,
    are_isomorphic,
    condorcet_winner,
    dominators,
    dominion,
    enumerate_tournaments,
    format_tournament,
    is_component,
    mcgarvey,
    neighborhood,
    parse_profile,
    parse_tournament,
    product,
    read_tournament,
    summary,
)
from .errors import *  # noqa: F401,F403
from .game import Strategy, TournamentGame, bipartisan, equilibrium, solve_symmetric_game, tournament_game, verify_equilibrium
from .qualified import banks, banks_element, cnl, copeland, covering_relation, iterated_uncovered, uncovered
from .solutions import SolutionId, solve
from .stable import (
    StableSetReport,
    is_externally_stable,
    is_internally_stable,
    minimal_covering_set,
    minimal_extending_set,
    minimal_stable_sets,
    top_cycle,
)
from .teq import Relation, TeqCache, is_retentive, minimal_retentive_sets, mtc, teq, teq_relation
from .lab import AxiomId, HarnessReport, check_axiom, check_inclusions, strong_stability_demo, sweep
