import random
import threading

import pytest
from hypothesis import given

from conftest import tournaments
from tournament_solutions import fixtures
from tournament_solutions.core import Tournament, enumerate_tournaments
from tournament_solutions.errors import EmptySet, EmptyUniverse, OrderTooLargeForExact
from tournament_solutions.solutions import trivial_mask
from tournament_solutions.stable import top_cycle_mask
from tournament_solutions.teq import (
    Relation,
    TeqCache,
    is_retentive,
    minimal_retentive_masks,
    minimal_retentive_sets,
    mtc,
    teq,
    teq_mask,
    teq_relation,
)


def test_mtc_examples():
    assert mtc({0, 1, 2}, [(0, 1), (1, 2)]) == {0}
    assert mtc({0, 1, 2}, [(0, 1), (1, 0)]) == {0, 1, 2}
    assert mtc({0, 1, 2}, [(0, 1), (1, 2), (2, 0)]) == {0, 1, 2}
    assert mtc({0, 1, 2, 3}, [(0, 1), (1, 0), (1, 2), (3, 2)]) == {0, 1, 3}
    r = Relation.from_pairs(3, {0, 1, 2}, [(2, 0), (2, 1)])
    assert mtc({0, 1, 2}, r) == {2}
    with pytest.raises(EmptyUniverse):
        mtc(set(), [])


def test_fixtures():
    assert teq(fixtures.load("F2")) == {0, 1, 2, 3, 5, 6, 7}
    assert teq(fixtures.load("F1")) == set(range(9))
    assert teq(fixtures.load("F3")) == set(range(5))
    assert teq(Tournament.transitive(4)) == {0}


@given(tournaments(1, 9))
def test_naive_equals_seeded(t):
    assert teq(t, "naive") == teq(t, "seeded")


def test_naive_equals_seeded_order_10():
    rng = random.Random(10)
    for _ in range(200):
        t = Tournament.random(10, rng)
        assert teq(t, "naive") == teq(t, "seeded")


@given(tournaments(1, 9))
def test_relation_is_subrelation_of_dominance(t):
    rel = teq_relation(t)
    for a, b in rel.pairs():
        assert t.beats(a, b)
    assert mtc(t.full, rel) == teq(t)


@given(tournaments(1, 9))
def test_cache_coherence(t):
    cache = TeqCache()
    first = teq(t, cache=cache)
    assert len(cache) > 0 or t.n == 1
    cache.clear()
    assert teq(t, cache=cache) == first == teq(t)


def test_shared_cache_threads():
    rng = random.Random(3)
    t = Tournament.random(12, rng)
    expected = teq(t)
    cache = TeqCache(shared=True)
    out = []

    def work():
        out.append(teq(t, cache=cache))

    threads = [threading.Thread(target=work) for _ in range(4)]
    for th in threads:
        th.start()
    for th in threads:
        th.join()
    assert out == [expected] * 4


def test_mode_and_caps(monkeypatch):
    with pytest.raises(ValueError):
        teq(Tournament.cycle3(), mode="fast")
    monkeypatch.setenv("TK_MAX_ORDER", "3")
    with pytest.raises(OrderTooLargeForExact):
        teq(Tournament.transitive(4))


def test_retentive_examples():
    tt = Tournament.transitive(3)
    rep = minimal_retentive_sets("TEQ", tt)
    assert rep.sets == (frozenset({0}),) and rep.unique
    assert is_retentive("TEQ", tt, {0})
    assert not is_retentive("TEQ", tt, {1})
    with pytest.raises(EmptySet):
        is_retentive("TEQ", tt, set())


@pytest.mark.parametrize("n", range(1, 6))
def test_trivial_solution_retentive_set_is_top_cycle(n):
    for t in enumerate_tournaments(n):
        assert minimal_retentive_masks(trivial_mask, t) == [top_cycle_mask(t, t.full)]


@pytest.mark.parametrize("n", range(1, 6))
def test_teq_unique_retentive_and_union(n):
    for t in enumerate_tournaments(n):
        found = minimal_retentive_masks("TEQ", t)
        assert len(found) == 1
        assert found[0] == teq_mask(t, t.full)
