"""The tournament equilibrium set and retentive sets.

``a -> b`` in the TEQ relation of ``B`` iff ``a`` is in TEQ of ``b``'s
dominators within ``B``; TEQ of ``B`` is the set of maximal elements of the
asymmetric part of that relation's transitive closure (MTC).  The recursion
only ever visits induced sub-tournaments of the root, so results are memoized
by subset mask.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Optional

from .bits import iter_bits, popcount, to_mask, to_set
from .core import Tournament, exact_cap
from .errors import EmptySet, EmptyUniverse, OrderTooLargeForExact
from .qualified import copeland_mask
from .solutions import SolutionLike, mask_solver, name_of
from .stable import SEARCH_CAP, StableSetReport, minimal_sets

NAIVE_CAP = 14
SEEDED_CAP = 24


@dataclass(frozen=True)
class Relation:
    """Binary relation on ``universe``; ``succ[a]`` masks the ``b`` with ``a -> b``."""

    universe: int
    succ: tuple

    def pairs(self) -> set:
        return {(a, b) for a in iter_bits(self.universe) for b in iter_bits(self.succ[a])}

    @classmethod
    def from_pairs(cls, n: int, universe, pairs) -> "Relation":
        u = universe if isinstance(universe, int) else to_mask(universe)
        succ = [0] * n
        for a, b in pairs:
            succ[a] |= 1 << b
        return cls(u, tuple(succ))


class TeqCache:
    """Memo of TEQ choice sets keyed by ``(mode, subset mask)`` for one root tournament.

    With ``shared=True`` every access goes through a lock so one instance may
    serve concurrent callers; entries are never overwritten once written.
    """

    def __init__(self, shared: bool = False):
        self.memo = {}
        self._lock = threading.Lock() if shared else None

    def get(self, key):
        if self._lock is None:
            return self.memo.get(key)
        with self._lock:
            return self.memo.get(key)

    def put(self, key, value) -> None:
        if self._lock is None:
            self.memo.setdefault(key, value)
        else:
            with self._lock:
                self.memo.setdefault(key, value)

    def clear(self) -> None:
        self.memo.clear()

    def __len__(self) -> int:
        return len(self.memo)


def mtc_mask(universe: int, succ) -> int:
    """MTC over bit masks; ``succ`` maps alternative -> successor mask."""
    members = list(iter_bits(universe))
    reach = {a: succ[a] & universe for a in members}
    for k in members:
        kb = 1 << k
        rk = reach[k]
        for a in members:
            if reach[a] & kb:
                reach[a] |= rk
    out = 0
    for a in members:
        ab = 1 << a
        ra = reach[a]
        if all(not (reach[b] & ab) or ra >> b & 1 for b in members if b != a):
            out |= ab
    return out


def mtc(universe, r) -> frozenset:
    """Maximal elements of the asymmetric part of the transitive closure of ``r``.

    ``r`` is a :class:`Relation` or an iterable of ``(a, b)`` pairs.
    """
    u = universe if isinstance(universe, int) else to_mask(universe)
    if u == 0:
        raise EmptyUniverse("MTC of an empty universe")
    if isinstance(r, Relation):
        succ = r.succ
    else:
        succ = {}
        for a, b in r:
            succ[a] = succ.get(a, 0) | 1 << b
        succ = _Default(succ)
    return to_set(mtc_mask(u, succ))


class _Default(dict):
    def __missing__(self, key):
        return 0


def teq_mask(t: Tournament, mask: int, mode: str = "seeded", cache: Optional[TeqCache] = None) -> int:
    if mode not in ("naive", "seeded"):
        raise ValueError("mode must be 'naive' or 'seeded'")
    limit = exact_cap(NAIVE_CAP if mode == "naive" else SEEDED_CAP)
    if popcount(mask) > limit:
        raise OrderTooLargeForExact(f"TEQ ({mode})", popcount(mask), limit)
    if cache is None:
        cache = TeqCache()
    solve = _naive if mode == "naive" else _seeded
    return solve(t, mask, cache)


def _naive(t: Tournament, mask: int, cache: TeqCache) -> int:
    if mask & (mask - 1) == 0:
        return mask
    key = ("naive", mask)
    hit = cache.get(key)
    if hit is not None:
        return hit
    cols = t.cols
    succ = _Default()
    for b in iter_bits(mask):
        dom = cols[b] & mask
        if dom:
            for a in iter_bits(_naive(t, dom, cache)):
                succ[a] = succ.get(a, 0) | 1 << b
    out = mtc_mask(mask, succ)
    cache.put(key, out)
    return out


def _seeded(t: Tournament, mask: int, cache: TeqCache) -> int:
    if mask & (mask - 1) == 0:
        return mask
    key = ("seeded", mask)
    hit = cache.get(key)
    if hit is not None:
        return hit
    cols = t.cols
    succ = _Default()
    b = c = copeland_mask(t, mask)
    while True:
        d = 0
        for a in iter_bits(c):
            dom = cols[a] & mask
            if dom:
                x = _seeded(t, dom, cache)
                for y in iter_bits(x):
                    succ[y] = succ.get(y, 0) | 1 << a
                d |= x
        if d & ~b == 0:
            out = mtc_mask(b, succ)
            break
        c = d
        b |= c
    cache.put(key, out)
    return out


def teq(t: Tournament, mode: str = "seeded", cache: Optional[TeqCache] = None) -> frozenset:
    return to_set(teq_mask(t, t.full, mode, cache))


def teq_relation(t: Tournament, b=None, mode: str = "seeded", cache: Optional[TeqCache] = None) -> Relation:
    mask = t.full if b is None else (b if isinstance(b, int) else to_mask(b))
    if mask == 0:
        raise EmptySet("TEQ relation of the empty set")
    if cache is None:
        cache = TeqCache()
    cols = t.cols
    succ = [0] * t.n
    for x in iter_bits(mask):
        dom = cols[x] & mask
        if dom:
            for a in iter_bits(teq_mask(t, dom, mode, cache)):
                succ[a] |= 1 << x
    return Relation(mask, tuple(succ))


# retentive sets ------------------------------------------------------------


def _dominator_choices(s: SolutionLike, t: Tournament) -> list:
    """``S`` applied to every non-empty dominator set (0 where there is none)."""
    if name_of(s) == "TEQ":
        cache = TeqCache()
        fn = lambda tt, m: teq_mask(tt, m, "seeded", cache)
    else:
        fn = mask_solver(s)
    return [fn(t, d) if d else 0 for d in t.cols]


def is_retentive(s: SolutionLike, t: Tournament, b) -> bool:
    mask = b if isinstance(b, int) else to_mask(b)
    if mask == 0:
        raise EmptySet("retentive sets are non-empty")
    choices = _dominator_choices(s, t)
    return all(choices[x] & ~mask == 0 for x in iter_bits(mask))


def minimal_retentive_masks(s: SolutionLike, t: Tournament) -> list:
    limit = exact_cap(SEARCH_CAP)
    if t.n > limit:
        raise OrderTooLargeForExact(f"minimal {name_of(s)}-retentive sets", t.n, limit)
    choices = _dominator_choices(s, t)
    return minimal_sets(t.full, lambda m: all(choices[x] & ~m == 0 for x in iter_bits(m)))


def minimal_retentive_sets(s: SolutionLike, t: Tournament) -> StableSetReport:
    masks = sorted(minimal_retentive_masks(s, t), key=lambda m: (popcount(m), sorted(iter_bits(m))))
    fn = mask_solver(s)
    union = 0
    for m in masks:
        union |= m
    return StableSetReport(
        subject=name_of(s),
        sets=tuple(to_set(m) for m in masks),
        union=to_set(union),
        unique=len(masks) == 1,
        internally_stable=tuple(fn(t, m) == m for m in masks),
    )
