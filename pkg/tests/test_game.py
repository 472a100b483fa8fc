import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import tournaments
from tournament_solutions import fixtures
from tournament_solutions.core import Tournament, enumerate_tournaments
from tournament_solutions.errors import DimensionMismatch, MalformedInput
from tournament_solutions.game import (
    Strategy,
    TournamentGame,
    bipartisan,
    equilibrium,
    solve_symmetric_game,
    tournament_game,
    verify_equilibrium,
)
from tournament_solutions.stable import minimal_covering_set

RPS = TournamentGame(((0, 1, -1), (-1, 0, 1), (1, -1, 0)))
F1_STRATEGY = " ".join(f"{i}:1/9" for i in range(9)) + " 9:0/1"
F2_STRATEGY = "0:1/3 1:1/9 2:0/1 3:1/9 4:0/1 5:1/9 6:1/3 7:0/1"


def test_rps_examples():
    third = Fraction(1, 3)
    assert verify_equilibrium(RPS, Strategy((third, third, third)))
    assert not verify_equilibrium(RPS, Strategy((1, 0, 0)))
    assert solve_symmetric_game(RPS).probabilities == (third, third, third)


def test_transitive_pure_strategy():
    g = tournament_game(Tournament.transitive(3))
    assert verify_equilibrium(g, Strategy((1, 0, 0)))
    assert equilibrium(Tournament.transitive(3)).probabilities == (1, 0, 0)


def test_fixture_strategies():
    assert equilibrium(fixtures.load("F1")).serialize() == F1_STRATEGY
    assert equilibrium(fixtures.load("F2")).serialize() == F2_STRATEGY
    assert bipartisan(fixtures.load("F2")) == {0, 1, 3, 5, 6}
    assert bipartisan(fixtures.load("F3")) == set(range(5))


def test_strategy_parse_roundtrip():
    s = Strategy.parse(F2_STRATEGY)
    assert s.serialize() == F2_STRATEGY
    assert s.support() == {0, 1, 3, 5, 6}
    # reduced to lowest terms on construction
    assert Strategy((Fraction(2, 4), Fraction(1, 2))).serialize() == "0:1/2 1:1/2"


@pytest.mark.parametrize("bad", ["0:1/2 2:1/2", "0:1/0", "0:x/2", "0:1/3"])
def test_strategy_parse_errors(bad):
    with pytest.raises(MalformedInput):
        Strategy.parse(bad)


def test_validation():
    with pytest.raises(MalformedInput):
        Strategy((Fraction(3, 2), Fraction(-1, 2)))
    with pytest.raises(MalformedInput):
        TournamentGame(((0, 1), (1, 0)))
    with pytest.raises(DimensionMismatch):
        TournamentGame(((0, 1),))
    with pytest.raises(DimensionMismatch):
        verify_equilibrium(RPS, Strategy((1,)))


@given(tournaments(1, 10))
def test_equilibrium_certified_and_value_zero(t):
    g = tournament_game(t)
    s = solve_symmetric_game(g)
    assert verify_equilibrium(g, s)
    payoff = sum(s.probabilities[i] * g.payoff[i][j] * s.probabilities[j] for i in range(t.n) for j in range(t.n))
    assert payoff == 0
    for i in range(t.n):
        for j in range(t.n):
            assert g.payoff[i][j] == -g.payoff[j][i]


@given(tournaments(1, 9), st.randoms(use_true_random=False))
def test_support_equivariant(t, r):
    perm = list(range(t.n))
    r.shuffle(perm)
    assert bipartisan(t.relabel(perm)) == {perm[a] for a in bipartisan(t)}


@given(tournaments(1, 9))
def test_support_has_odd_size_and_lies_in_mc(t):
    bp = bipartisan(t)
    assert len(bp) % 2 == 1
    assert bp <= minimal_covering_set(t)


def test_bp_shortcut_agrees_with_lp():
    for t in enumerate_tournaments(5):
        assert bipartisan(t) == equilibrium(t).support()


def test_random_order_15():
    rng = random.Random(15)
    for _ in range(20):
        t = Tournament.random(15, rng)
        g = tournament_game(t)
        assert verify_equilibrium(g, solve_symmetric_game(g))
