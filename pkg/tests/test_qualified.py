import random

import pytest
from hypothesis import given

from conftest import tournaments
from tournament_solutions import fixtures
from tournament_solutions.bits import to_mask
from tournament_solutions.core import Tournament, enumerate_tournaments
from tournament_solutions.errors import OrderTooLargeForExact
from tournament_solutions.lab import check_axiom
from tournament_solutions.qualified import (
    banks,
    banks_element,
    banks_mask,
    cnl,
    cnl_mask,
    copeland,
    copeland_mask,
    covering_relation,
    iterated_uncovered,
    iterated_uncovered_mask,
    uncovered,
    uncovered_by_covering,
    uncovered_by_matrix,
    uncovered_mask,
)


def _brute_banks(t):
    """Tops of maximal transitive subsets, straight from the definition."""
    out = set()
    for m in range(1, t.full + 1):
        members = [a for a in range(t.n) if m >> a & 1]
        scores = sorted((t.rows[a] & m).bit_count() for a in members)
        if scores != list(range(len(members))):
            continue
        if any(t.rows[x] & m == m for x in range(t.n) if not m >> x & 1):
            continue
        out.add(max(members, key=lambda a: (t.rows[a] & m).bit_count()))
    return frozenset(out)


def test_trivial_cases():
    tt = Tournament.transitive(3)
    assert cnl(tt) == {0, 1}
    assert copeland(tt) == ((2, 1, 0), frozenset({0}))
    assert uncovered(tt) == banks(tt) == iterated_uncovered(tt) == {0}
    c3 = Tournament.cycle3()
    for fn in (cnl, uncovered, banks, iterated_uncovered):
        assert fn(c3) == {0, 1, 2}


def test_fixture_values():
    f1, f2, f3 = (fixtures.load(n) for n in fixtures.NAMES)
    assert copeland(f1)[1] == {0, 1, 3, 4, 6, 7}
    assert banks(f1) == set(range(9))
    assert copeland(f2)[1] == {0, 1}
    assert 4 in banks(f2) and banks(f2) == set(range(8))
    assert copeland(f3)[1] == {4}
    assert uncovered(f3) == banks(f3) == set(range(5))


def test_covering_relation():
    t = Tournament.transitive(3)
    rel = covering_relation(t)
    assert (0, 1) in rel and (0, 2) in rel and (1, 2) in rel
    assert (1, 0) not in rel
    assert covering_relation(Tournament.cycle3()).pairs() == []


@given(tournaments(1, 9))
def test_uncovered_three_ways(t):
    m = t.full
    uc = uncovered_mask(t, m)
    assert uc == uncovered_by_covering(t, m) == uncovered_by_matrix(t, m)


@given(tournaments(1, 9))
def test_inclusion_chain(t):
    m = t.full
    ba, uc, cn, co = banks_mask(t, m), uncovered_mask(t, m), cnl_mask(t, m), copeland_mask(t, m)
    uci = iterated_uncovered_mask(t, m)
    assert ba & ~uc == 0 and uc & ~cn == 0 and co & ~uc == 0
    assert uci & ~uc == 0 and uncovered_mask(t, uci) == uci


@given(tournaments(1, 8))
def test_banks_matches_definition(t):
    assert banks(t) == _brute_banks(t)


@given(tournaments(2, 10))
def test_condorcet_winner_singleton(t):
    w = 0
    rows = list(t.rows)
    for b in range(1, t.n):
        if not rows[0] >> b & 1:
            rows[0] |= 1 << b
            rows[b] &= ~1
    t = Tournament(rows)
    for fn in (uncovered, banks, iterated_uncovered, lambda x: copeland(x)[1]):
        assert fn(t) == {w}
    assert w in cnl(t)


@pytest.mark.parametrize("n", range(1, 6))
def test_strong_retentiveness(n):
    for t in enumerate_tournaments(n):
        full = {fn: fn(t, t.full) for fn in (cnl_mask, uncovered_mask, banks_mask)}
        for a in range(n):
            d = t.cols[a]
            if d:
                for fn, s in full.items():
                    assert fn(t, d) & ~s == 0


@pytest.mark.parametrize("sol", ["CNL", "UC", "BA"])
@pytest.mark.parametrize("axiom", ["MON", "WSP"])
def test_mon_and_wsp_exhaustive(sol, axiom):
    for n in range(1, 6):
        for t in enumerate_tournaments(n):
            assert check_axiom(sol, axiom, t) is None


def test_banks_element_cycle_attains_every_alternative():
    c3 = Tournament.cycle3()
    assert {banks_element(c3, seed) for seed in range(40)} == {0, 1, 2}


def test_banks_element_is_member():
    rng = random.Random(0)
    f2 = fixtures.load("F2")
    assert all(banks_element(f2, s) in banks(f2) for s in range(50))
    for _ in range(100):
        t = Tournament.random(rng.randint(1, 10), rng)
        assert banks_element(t, rng.random()) in banks(t)


def test_banks_element_reproducible():
    t = fixtures.load("F1")
    assert [banks_element(t, s) for s in range(10)] == [banks_element(t, s) for s in range(10)]


def test_banks_cap(monkeypatch):
    monkeypatch.setenv("TK_MAX_ORDER", "4")
    with pytest.raises(OrderTooLargeForExact) as err:
        banks(Tournament.transitive(5))
    assert err.value.solver == "BA"


def test_restricted_mask_solvers():
    f1 = fixtures.load("F1")
    block = to_mask([0, 1, 2])
    assert uncovered_mask(f1, block) == block
    assert copeland_mask(f1, to_mask([0, 3])) == 1
    assert cnl_mask(f1, 1 << 9) == 1 << 9
