import random

import pytest
from hypothesis import given, strategies as st

from conftest import tournaments
from tournament_solutions import fixtures
from tournament_solutions.core import Tournament, product
from tournament_solutions.errors import NotAProduct, NotRegular, OrderTooLarge
from tournament_solutions.lab import (
    AxiomId,
    Witness,
    check_axiom,
    check_inclusions,
    find_witness,
    parse_witnesses,
    run_check,
    strong_stability_demo,
    sweep,
)

COM_SOLUTIONS = ["UC", "BA", "MC", "BP", "TEQ"]


def test_inclusions_trivial_and_fixtures():
    for name in ("F1", "F2", "F3"):
        rep = check_inclusions(fixtures.load(name))
        assert rep.hard_ok and rep.violations() == []
    assert check_inclusions(Tournament.transitive(3)).violations() == []


def test_strong_stability_demo():
    rep = strong_stability_demo()
    assert rep.external_sets == 8 and rep.internal_and_external == 0
    assert rep.substituted_order == 9
    assert rep.substituted_full_internal and rep.substituted_full_external
    assert len(rep.lines()) == 3


def test_known_witnesses_replay():
    w = find_witness("axiom:CO:WSP", (1, 6))
    assert w is not None and w.replay()
    w2 = find_witness("axiom:UC:IUA", (1, 6))
    assert w2 is not None and w2.replay()
    (back,) = parse_witnesses(w2.serialize())
    assert back == w2


def test_fixture_axioms():
    f1, f2 = fixtures.load("F1"), fixtures.load("F2")
    assert check_axiom("MC", "SSP", f1) is None
    assert check_axiom("MC", "SSP", f2) is None
    assert check_axiom("BA", AxiomId.IRR, Tournament.cycle3()) is None


def test_tampered_witness_does_not_replay():
    w = find_witness("axiom:CO:WSP", (1, 6))
    assert not Witness(w.check, w.tournament, "remove={9}").replay()
    assert not Witness(w.check, Tournament.transitive(4), w.detail).replay()


@pytest.mark.parametrize("sol", COM_SOLUTIONS)
@given(data=st.data())
def test_com_on_random_products(sol, data):
    k = data.draw(st.integers(1, 4))
    summ = data.draw(tournaments(k, k))
    parts = [data.draw(tournaments(1, 3)) for _ in range(k)]
    t, dec = product(summ, parts)
    assert check_axiom(sol, "COM", t, dec) is None


def test_com_failures_for_tc_and_co():
    c3, one = Tournament.cycle3(), Tournament([0])
    t, dec = product(Tournament.transitive(2), [c3, one])
    assert check_axiom("TC", "COM", t, dec) is None
    t, dec = product(c3, [Tournament.transitive(2), one, one])
    w = check_axiom("TC", "COM", t, dec)
    assert w is not None and w.replay()
    t, dec = product(c3, [c3, one, one])
    assert check_axiom("CO", "COM", t, dec) is not None


def test_com_and_irr_errors():
    with pytest.raises(NotAProduct):
        check_axiom("MC", "COM", Tournament.cycle3())
    with pytest.raises(NotRegular):
        check_axiom("BA", "IRR", Tournament.transitive(3))
    pick_lowest = lambda t, m: m & -m
    w = check_axiom(pick_lowest, "IRR", Tournament.cycle3())
    assert w is not None and w.detail == "chosen={1}"


def test_sweep_report_format_and_determinism():
    checks = ["inclusions", "me-unique", "axiom:co:wsp"]
    a = sweep((1, 4), checks=checks)
    b = sweep((1, 4), checks=checks)
    assert a.body() == b.body()
    body = a.body().splitlines()
    assert body[0] == "scope: orders=1..4 mode=labeled sample=exhaustive"
    assert body[1] == "seed: 0"
    assert body[2] == "check:inclusions pass=75 viol=0 kind=hard"
    assert body[4].startswith("check:axiom:CO:WSP pass=")
    assert any(line.startswith("witness: check=axiom:CO:WSP") for line in body)
    assert all(w.replay() for w in parse_witnesses(a.body()))
    assert "time:inclusions" in a.render()


def test_sweep_sampled_and_parallel_agree():
    a = sweep((7, 7), checks=["teq-unique"], sample=30, seed=7)
    b = sweep((7, 7), checks=["teq-unique"], sample=30, seed=7, jobs=2)
    assert a.body() == b.body()
    assert a.findings == [] and a.tallies["teq-unique"].passed == 30


def test_sweep_canonical_mode():
    rep = sweep((1, 5), mode="canonical", checks=["oracles"])
    assert rep.tallies["oracles"].passed == 1 + 1 + 2 + 4 + 12


def test_sweep_errors():
    with pytest.raises(OrderTooLarge):
        sweep((9, 9), checks=["inclusions"])
    with pytest.raises(ValueError):
        sweep((1, 3), checks=["bogus"])
    with pytest.raises(ValueError):
        sweep((1, 3), checks=["axiom:MC:COM"])
    with pytest.raises(ValueError):
        sweep((3, 1))


def test_hard_violation_aborts(monkeypatch):
    import tournament_solutions.lab as lab

    broken = lab.Check("inclusions", lab.HARD, lambda t: {"fake": t.n < 3})
    monkeypatch.setitem(lab._CHECKS, "inclusions", broken)
    rep = sweep((1, 4), checks=["inclusions"])
    assert rep.hard_violations == 1 and rep.aborted is not None
    assert rep.aborted.detail == "failed=fake" and rep.aborted.tournament.n == 3
    assert "abort: hard violation in check:inclusions" in rep.body()


def test_conjectural_violation_is_a_finding(monkeypatch):
    import tournament_solutions.lab as lab

    fake = lab.Check("me-unique", lab.CONJECTURAL, lambda t: {"ME-unique": t.n != 2})
    monkeypatch.setitem(lab._CHECKS, "me-unique", fake)
    rep = sweep((1, 3), checks=["me-unique"])
    assert rep.hard_violations == 0 and len(rep.findings) == 2
    assert "FINDING check:me-unique failed=ME-unique" in rep.body()


def test_run_check_irr_skips_irregular():
    assert run_check("axiom:BA:IRR", Tournament.transitive(3)) is None


def test_iua_sampling_is_seeded():
    rng = random.Random(1)
    t = Tournament.random(9, rng)
    assert check_axiom("TC", "IUA", t, seed=3) == check_axiom("TC", "IUA", t, seed=3)
