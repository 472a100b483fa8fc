"""Verification harness: inclusion checks, axiom tests, sweeps and reports.

Checks come in three kinds.  ``hard`` checks encode proved results; a
violation aborts a sweep with a counterexample.  ``conjectural`` checks encode
open conjectures and their consequences; a violation is recorded as a FINDING
and never fails anything.  ``observe`` checks (the axiom tests) just count.

Every violation is captured as a :class:`Witness`: the tournament, the check
name and a deterministic detail string.  Replaying a witness re-runs the
check on the stored tournament and compares details, so a witness printed in
a report can be verified on its own.
"""

from __future__ import annotations

import itertools
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional, Sequence

from .bits import format_set, iter_bits, popcount, to_mask
from .core import (
    LABELED_MAX_ORDER,
    Decomposition,
    Tournament,
    enumerate_tournaments,
    format_tournament,
    parse_tournament,
    product,
    summary,
)
from .errors import MalformedInput, NotAProduct, NotRegular, OrderTooLarge
from .fixtures import build_f3
from .game import bipartisan_mask, solve_symmetric_game, tournament_game, verify_equilibrium
from .qualified import (
    banks_mask,
    copeland_mask,
    iterated_uncovered_mask,
    uncovered_by_covering,
    uncovered_by_matrix,
    uncovered_mask,
)
from .solutions import SolutionLike, mask_solver, name_of
from .stable import (
    externally_stable_sets,
    is_externally_stable,
    is_internally_stable,
    minimal_covering_mask,
    minimal_extending_masks,
    minimal_stable_masks,
    top_cycle_by_reachability,
    top_cycle_mask,
)
from .teq import TeqCache, minimal_retentive_masks, teq_mask

HARD = "hard"
CONJECTURAL = "conjectural"
OBSERVE = "observe"

IUA_CAP_EDGES = 15


class AxiomId(str, Enum):
    MON = "MON"
    IUA = "IUA"
    WSP = "WSP"
    SSP = "SSP"
    COM = "COM"
    IRR = "IRR"

    def __str__(self) -> str:
        return self.value


# witnesses -----------------------------------------------------------------


@dataclass(frozen=True)
class Witness:
    check: str
    tournament: Tournament
    detail: str

    def serialize(self) -> str:
        head = f"witness: check={self.check} detail={self.detail}\n"
        return head + format_tournament(self.tournament)

    def replay(self) -> bool:
        """True iff re-running the check on the stored tournament reproduces this witness."""
        if self.check.startswith("axiom:") and self.check.endswith(":COM"):
            # the decomposition travels in the detail string
            try:
                dec = summary(self.tournament, _parse_blocks(self.detail.partition("blocks=")[2]))
            except (NotAProduct, ValueError):
                return False
            return check_axiom(self.check.split(":")[1], "COM", self.tournament, dec) == self
        return run_check(self.check, self.tournament) == self


def parse_witnesses(text: str) -> list:
    """Witness blocks embedded in a report (or a standalone witness file)."""
    out = []
    lines = text.splitlines()
    i = 0
    while i < len(lines):
        line = lines[i]
        if not line.startswith("witness:"):
            i += 1
            continue
        fields = line[len("witness:"):].strip()
        check, _, detail = fields.partition(" detail=")
        if not check.startswith("check="):
            raise MalformedInput(f"bad witness header {line!r}")
        n = int(lines[i + 1])
        body = lines[i + 1:i + 2 + n]
        out.append(Witness(check[len("check="):], parse_tournament("\n".join(body)), detail))
        i += 2 + n
    return out


# inclusions ----------------------------------------------------------------


def _sub(a: int, b: int) -> bool:
    return a & ~b == 0


@dataclass(frozen=True)
class InclusionReport:
    """Outcome of every inclusion/uniqueness relation on one tournament."""

    results: dict
    kinds: dict

    def violations(self, kind: Optional[str] = None) -> list:
        return [k for k, ok in self.results.items() if not ok and (kind is None or self.kinds[k] == kind)]

    @property
    def hard_ok(self) -> bool:
        return not self.violations(HARD)


def _hard_inclusions(t: Tournament) -> dict:
    m = t.full
    ba = banks_mask(t, m)
    co = copeland_mask(t, m)
    uc = uncovered_mask(t, m)
    uci = iterated_uncovered_mask(t, m)
    tc = top_cycle_mask(t, m)
    mc = minimal_covering_mask(t, m)
    bp = bipartisan_mask(t, m)
    return {
        "BA<=UC": _sub(ba, uc),
        "CO<=UC": _sub(co, uc),
        "UC<=TC": _sub(uc, tc),
        "MC<=UCINF": _sub(mc, uci),
        "UCINF<=UC": _sub(uci, uc),
        "MC<=TC": _sub(mc, tc),
        "BP<=MC": _sub(bp, mc),
    }


def _mc_unique(t: Tournament) -> dict:
    found = minimal_stable_masks("UC", t, t.full)
    return {
        "MC-unique": len(found) == 1,
        "MC=grown-BP": len(found) == 1 and found[0] == minimal_covering_mask(t, t.full),
    }


def _me_masks(t: Tournament) -> list:
    return minimal_extending_masks(t, t.full)


def _conjectural_inclusions(t: Tournament) -> dict:
    me = 0
    for x in _me_masks(t):
        me |= x
    return {
        "TEQ<=ME": _sub(teq_mask(t, t.full), me),
        "ME<=MC": _sub(me, minimal_covering_mask(t, t.full)),
        "ME<=BA": _sub(me, banks_mask(t, t.full)),
    }


def _me_unique(t: Tournament) -> dict:
    return {"ME-unique": len(_me_masks(t)) == 1}


def _teq_unique(t: Tournament) -> dict:
    return {"TEQ-retentive-unique": len(minimal_retentive_masks("TEQ", t)) == 1}


def _teq_union(t: Tournament) -> dict:
    union = 0
    for x in minimal_retentive_masks("TEQ", t):
        union |= x
    return {"TEQ=union-retentive": union == teq_mask(t, t.full)}


def _oracles(t: Tournament) -> dict:
    m = t.full
    uc = uncovered_mask(t, m)
    cache = TeqCache()
    return {
        "TC=reach": top_cycle_mask(t, m) == top_cycle_by_reachability(t, m),
        "UC=covering": uc == uncovered_by_covering(t, m),
        "UC=matrix": uc == uncovered_by_matrix(t, m),
        "TEQ-naive=seeded": teq_mask(t, m, "naive", cache) == teq_mask(t, m, "seeded", cache),
    }


def _equilibrium(t: Tournament) -> dict:
    g = tournament_game(t)
    return {"equilibrium": verify_equilibrium(g, solve_symmetric_game(g))}


def check_inclusions(t: Tournament, conjectural: bool = True) -> InclusionReport:
    """Hard chain (BA, CO in UC; UC in TC; MC in UC^inf in UC; MC in TC; BP in
    MC; MC unique) plus, unless disabled, the conjectural relations."""
    results, kinds = {}, {}
    for fn, kind in [(_hard_inclusions, HARD), (_mc_unique, HARD)]:
        for k, v in fn(t).items():
            results[k], kinds[k] = v, kind
    if conjectural:
        for fn in (_conjectural_inclusions, _me_unique, _teq_unique):
            for k, v in fn(t).items():
                results[k], kinds[k] = v, CONJECTURAL
    return InclusionReport(results, kinds)


# axioms --------------------------------------------------------------------


def _with_edges(t: Tournament, pairs: Sequence[tuple], delta: int) -> Tournament:
    rows = list(t.rows)
    for e, (a, b) in enumerate(pairs):
        if delta >> e & 1:
            rows[a] ^= 1 << b
            rows[b] ^= 1 << a
    return Tournament(rows)


def _iua_deltas(k: int, seed: int):
    if k <= IUA_CAP_EDGES:
        # fewest flipped edges first, so the first violation is a smallest one
        return sorted(range(1, 1 << k), key=lambda d: (popcount(d), d))
    rng = random.Random(seed)
    return sorted({rng.getrandbits(k) or 1 for _ in range(1 << IUA_CAP_EDGES)}, key=lambda d: (popcount(d), d))


def _blocks_text(blocks) -> str:
    return ";".join(format_set(to_mask(b)) for b in blocks)


def _parse_blocks(text: str) -> list:
    out = []
    for part in text.split(";"):
        inner = part.strip().strip("{}")
        out.append(frozenset(int(x) - 1 for x in inner.split(",") if x))
    return out


def check_axiom(
    s: SolutionLike,
    axiom,
    t: Tournament,
    decomposition: Optional[Decomposition] = None,
    seed: int = 0,
) -> Optional[Witness]:
    """``None`` if ``t`` passes, otherwise a witness of the failure.

    For IRR the returned witness is evidence *for* the property: ``t`` is a
    regular tournament on which ``s`` does not choose everything.  Indices in
    witness details are 1-based.
    """
    ax = AxiomId(str(axiom).upper())
    fn = mask_solver(s)
    name = name_of(s)
    check = f"axiom:{name}:{ax.value}"
    full = t.full
    chosen = fn(t, full)
    unchosen = full & ~chosen

    if ax is AxiomId.MON:
        for a in iter_bits(chosen):
            for b in iter_bits(t.cols[a]):
                if not fn(t.flip(a, b), full) >> a & 1:
                    return Witness(check, t, f"raise={a + 1} over={b + 1}")
        return None

    if ax is AxiomId.IUA:
        outs = list(iter_bits(unchosen))
        pairs = list(itertools.combinations(outs, 2))
        for delta in _iua_deltas(len(pairs), seed):
            t2 = _with_edges(t, pairs, delta)
            if fn(t2, full) != chosen:
                flipped = [f"{a + 1}-{b + 1}" for e, (a, b) in enumerate(pairs) if delta >> e & 1]
                return Witness(check, t, "flip=" + ",".join(flipped))
        return None

    if ax in (AxiomId.WSP, AxiomId.SSP):
        outs = list(iter_bits(unchosen))
        for k in range(1, len(outs) + 1):
            for removed in itertools.combinations(outs, k):
                b = full & ~to_mask(removed)
                got = fn(t, b)
                ok = _sub(got, chosen) if ax is AxiomId.WSP else got == chosen
                if not ok:
                    return Witness(check, t, "remove=" + format_set(to_mask(removed)))
        return None

    if ax is AxiomId.COM:
        if decomposition is None:
            raise NotAProduct("COM needs the tournament's decomposition")
        blocks = [to_mask(b) for b in decomposition.blocks]
        if summary(t, blocks).summary != decomposition.summary:
            raise NotAProduct("decomposition summary does not match the tournament")
        composed = 0
        for i in iter_bits(fn(decomposition.summary, decomposition.summary.full)):
            composed |= fn(t, blocks[i])
        if composed != chosen:
            return Witness(check, t, "blocks=" + _blocks_text(decomposition.blocks))
        return None

    if ax is AxiomId.IRR:
        if not t.is_regular():
            raise NotRegular("IRR is tested on regular tournaments")
        if chosen != full:
            return Witness(check, t, "chosen=" + format_set(chosen))
        return None

    raise ValueError(f"unknown axiom {axiom!r}")


# check registry ------------------------------------------------------------


@dataclass(frozen=True)
class Check:
    name: str
    kind: str
    relations: Callable[[Tournament], dict]


_CHECKS = {
    "inclusions": Check("inclusions", HARD, _hard_inclusions),
    "mc-unique": Check("mc-unique", HARD, _mc_unique),
    "oracles": Check("oracles", HARD, _oracles),
    "equilibrium": Check("equilibrium", HARD, _equilibrium),
    "conjectural-inclusions": Check("conjectural-inclusions", CONJECTURAL, _conjectural_inclusions),
    "me-unique": Check("me-unique", CONJECTURAL, _me_unique),
    "teq-unique": Check("teq-unique", CONJECTURAL, _teq_unique),
    "teq-union": Check("teq-union", CONJECTURAL, _teq_union),
}

CHECK_NAMES = tuple(_CHECKS) + ("axiom:<SOLUTION>:<AXIOM>",)


def check_kind(name: str) -> str:
    if name in _CHECKS:
        return _CHECKS[name].kind
    if name.startswith("axiom:"):
        return OBSERVE
    raise ValueError(f"unknown check {name!r}; expected one of {', '.join(CHECK_NAMES)}")


def validate_checks(names: Sequence[str]) -> list:
    out = []
    for name in names:
        check_kind(name)
        if name.startswith("axiom:"):
            parts = name.split(":")
            if len(parts) != 3:
                raise ValueError(f"axiom checks look like axiom:MC:SSP, got {name!r}")
            sol, ax = name_of(parts[1]), AxiomId(parts[2].upper())
            if ax is AxiomId.COM:
                raise ValueError("COM needs explicit decompositions and cannot be swept")
            name = f"axiom:{sol}:{ax.value}"
        out.append(name)
    return out


def run_check(name: str, t: Tournament) -> Optional[Witness]:
    """Run one named check on ``t``; ``None`` when it passes (or does not apply)."""
    if name.startswith("axiom:"):
        _, sol, ax = name.split(":")
        if ax == "IRR" and not t.is_regular():
            return None
        return check_axiom(sol, ax, t)
    rel = _CHECKS[name].relations(t)
    failed = [k for k, ok in rel.items() if not ok]
    if not failed:
        return None
    return Witness(name, t, "failed=" + ",".join(failed))


# sweeps --------------------------------------------------------------------


@dataclass
class CheckTally:
    passed: int = 0
    violated: int = 0
    witnesses: list = field(default_factory=list)
    seconds: float = 0.0


@dataclass
class HarnessReport:
    orders: tuple
    mode: str
    sample: Optional[int]
    seed: int
    checks: tuple
    tallies: dict
    aborted: Optional[Witness] = None
    max_witnesses: int = 3

    @property
    def hard_violations(self) -> int:
        return sum(self.tallies[c].violated for c in self.checks if check_kind(c) == HARD)

    @property
    def findings(self) -> list:
        return [w for c in self.checks if check_kind(c) == CONJECTURAL for w in self.tallies[c].witnesses]

    def body(self) -> str:
        """Deterministic part of the report (no timings)."""
        lo, hi = self.orders
        out = [
            f"scope: orders={lo}..{hi} mode={self.mode} sample={self.sample if self.sample else 'exhaustive'}",
            f"seed: {self.seed}",
        ]
        for c in self.checks:
            tal = self.tallies[c]
            out.append(f"check:{c} pass={tal.passed} viol={tal.violated} kind={check_kind(c)}")
        for c in self.checks:
            tal = self.tallies[c]
            for w in tal.witnesses:
                if check_kind(c) == CONJECTURAL:
                    out.append(f"FINDING check:{c} {w.detail}")
                out.append(w.serialize().rstrip("\n"))
        if self.aborted is not None:
            out.append(f"abort: hard violation in check:{self.aborted.check}")
        return "\n".join(out) + "\n"

    def render(self) -> str:
        tail = [f"time:{c} {self.tallies[c].seconds:.3f}s" for c in self.checks]
        return self.body() + "\n".join(tail) + "\n"


def _work_items(orders, mode, sample, seed) -> list:
    lo, hi = orders
    items = []
    rng = random.Random(seed)
    for n in range(lo, hi + 1):
        m = n * (n - 1) // 2
        if sample:
            items += [(n, rng.getrandbits(m) if m else 0) for _ in range(sample)]
        elif mode == "labeled":
            if n > LABELED_MAX_ORDER:
                raise OrderTooLarge(f"exhaustive labeled sweep capped at order {LABELED_MAX_ORDER}; use sampling")
            items += [(n, code) for code in range(1 << m)]
        elif mode == "canonical":
            for t in enumerate_tournaments(n, "canonical"):
                items.append((n, t.code))
        else:
            raise ValueError("mode must be 'labeled' or 'canonical'")
    return items


def _run_items(items, checks, max_witnesses, stop_on_hard=True):
    tallies = {c: CheckTally() for c in checks}
    aborted = None
    for n, code in items:
        t = Tournament.from_code(n, code)
        for c in checks:
            tal = tallies[c]
            start = time.perf_counter()
            w = run_check(c, t)
            tal.seconds += time.perf_counter() - start
            if w is None:
                tal.passed += 1
                continue
            tal.violated += 1
            if len(tal.witnesses) < max_witnesses:
                tal.witnesses.append(w)
            if check_kind(c) == HARD and stop_on_hard:
                aborted = w
                return tallies, aborted
    return tallies, aborted


def _chunk_worker(args):
    items, checks, max_witnesses = args
    return _run_items(items, checks, max_witnesses)


def sweep(
    orders: tuple,
    mode: str = "labeled",
    checks: Sequence[str] = ("inclusions",),
    sample: Optional[int] = None,
    seed: int = 0,
    jobs: int = 1,
    max_witnesses: int = 3,
) -> HarnessReport:
    """Run ``checks`` over every tournament of the given orders (or a seeded sample).

    Work is a list of ``(order, code)`` items in enumeration order.  With
    ``jobs > 1`` the list is cut into contiguous chunks; merging keeps chunk
    order, so counts and the earliest witnesses match a single-process run
    (after a hard abort, later chunks may have counted further tournaments).
    """
    lo, hi = orders
    if lo < 1 or hi < lo:
        raise ValueError(f"bad order range {lo}..{hi}")
    checks = tuple(validate_checks(checks))
    items = _work_items(orders, mode, sample, seed)
    if jobs <= 1 or len(items) < 2:
        tallies, aborted = _run_items(items, checks, max_witnesses)
    else:
        size = -(-len(items) // jobs)
        chunks = [(items[i:i + size], checks, max_witnesses) for i in range(0, len(items), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_chunk_worker, chunks))
        tallies = {c: CheckTally() for c in checks}
        aborted = None
        for part, part_abort in parts:
            for c in checks:
                tal, p = tallies[c], part[c]
                tal.passed += p.passed
                tal.violated += p.violated
                tal.seconds += p.seconds
                tal.witnesses.extend(p.witnesses[: max_witnesses - len(tal.witnesses)])
            if aborted is None and part_abort is not None:
                aborted = part_abort
    return HarnessReport((lo, hi), mode, sample, seed, checks, tallies, aborted, max_witnesses)


def find_witness(check: str, orders: tuple, mode: str = "labeled") -> Optional[Witness]:
    """First tournament in enumeration order that violates ``check``."""
    check = validate_checks([check])[0]
    for n in range(orders[0], orders[1] + 1):
        for t in enumerate_tournaments(n, mode):
            w = run_check(check, t)
            if w is not None:
                return w
    return None


# strong stability ----------------------------------------------------------


@dataclass(frozen=True)
class StrongStabilityReport:
    external_sets: int
    internal_and_external: int
    substituted_order: int
    substituted_full_internal: bool
    substituted_full_external: bool

    def lines(self) -> list:
        return [
            f"F3 externally CO-stable sets: {self.external_sets}",
            f"F3 internally and externally CO-stable sets: {self.internal_and_external}",
            f"F3 with 3-cycles for alternatives 4 and 5 (order {self.substituted_order}): "
            f"full set internal={self.substituted_full_internal} external={self.substituted_full_external}",
        ]


def strong_stability_demo() -> StrongStabilityReport:
    t = build_f3()
    ext = externally_stable_sets("CO", t)
    both = [b for b in ext if is_internally_stable("CO", t, b)]
    c3 = Tournament.cycle3()
    # F3 is the 3-cycle summary over (3-cycle, {4}, {5}); blow up 4 and 5 as well
    big, _ = product(c3, [c3, c3, c3])
    return StrongStabilityReport(
        external_sets=len(ext),
        internal_and_external=len(both),
        substituted_order=big.n,
        substituted_full_internal=is_internally_stable("CO", big, big.full),
        substituted_full_external=is_externally_stable("CO", big, big.full),
    )
