"""Externally stable sets and the minimal-stable-set solutions.

A set ``B`` is externally stable for a solution ``S`` when no outside
alternative ``a`` is chosen by ``S`` from ``B | {a}``.  Minimal such sets give
the top cycle (for CNL), the minimal covering set (for UC) and the minimal
extending set (for BA).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable

from .bits import iter_bits, popcount, to_mask, to_set
from .core import Tournament, exact_cap
from .errors import EmptySet, OrderTooLargeForExact
from .game import bipartisan_mask
from .qualified import banks_member, copeland_mask, uc_member
from .solutions import SolutionLike, mask_solver, member_test, name_of

SEARCH_CAP = 16
ME_CAP = 12


@dataclass(frozen=True)
class StableSetReport:
    subject: str
    sets: tuple
    union: frozenset
    unique: bool
    internally_stable: tuple

    def describe(self, one_based: bool = True) -> str:
        off = 1 if one_based else 0
        fmt = lambda s: "{" + ",".join(str(i + off) for i in sorted(s)) + "}"
        return f"{self.subject}: " + " ".join(fmt(s) for s in self.sets)


def _as_mask(t: Tournament, b) -> int:
    mask = b if isinstance(b, int) else to_mask(b)
    if mask == 0:
        raise EmptySet("stability is defined for non-empty sets")
    return mask


def minimal_sets(universe: int, predicate: Callable[[int], bool]) -> list:
    """Every inclusion-minimal non-empty subset of ``universe`` satisfying ``predicate``.

    Subsets are visited by increasing size, lexicographically within a size.
    When a set is reached, all its proper subsets have been decided already, so
    it is minimal iff it contains no previously found minimal set; supersets of
    found sets are therefore skipped without evaluating the predicate.
    """
    members = list(iter_bits(universe))
    found = []
    for k in range(1, len(members) + 1):
        new = []
        for combo in combinations(members, k):
            m = 0
            for a in combo:
                m |= 1 << a
            if any(f & m == f for f in found):
                continue
            if predicate(m):
                new.append(m)
        found.extend(new)
    return found


def _ext_stable(test, t: Tournament, mask: int, universe: int) -> bool:
    for a in iter_bits(universe & ~mask):
        if test(t, mask | 1 << a, a):
            return False
    return True


def is_externally_stable(s: SolutionLike, t: Tournament, b) -> bool:
    mask = _as_mask(t, b)
    name = name_of(s)
    if name == "BA" and popcount(mask) + 1 > exact_cap(SEARCH_CAP):
        raise OrderTooLargeForExact("BA", popcount(mask) + 1, exact_cap(SEARCH_CAP))
    return _ext_stable(member_test(s), t, mask, t.full)


def is_internally_stable(s: SolutionLike, t: Tournament, b) -> bool:
    mask = _as_mask(t, b)
    return mask_solver(s)(t, mask) == mask


def externally_stable_sets(s: SolutionLike, t: Tournament) -> list:
    """All externally stable sets (not only minimal ones), by increasing size."""
    cap = exact_cap(SEARCH_CAP)
    if t.n > cap:
        raise OrderTooLargeForExact(f"stable sets of {name_of(s)}", t.n, cap)
    test = member_test(s)
    out = []
    members = list(range(t.n))
    for k in range(1, t.n + 1):
        for combo in combinations(members, k):
            m = to_mask(combo)
            if _ext_stable(test, t, m, t.full):
                out.append(to_set(m))
    return out


def _report(s: SolutionLike, t: Tournament, masks: Iterable[int]) -> StableSetReport:
    masks = sorted(masks, key=lambda m: (popcount(m), sorted(iter_bits(m))))
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


def minimal_stable_masks(s: SolutionLike, t: Tournament, mask: int, cap: int = SEARCH_CAP) -> list:
    limit = exact_cap(cap)
    if popcount(mask) > limit:
        raise OrderTooLargeForExact(f"minimal {name_of(s)}-stable sets", popcount(mask), limit)
    test = member_test(s)
    return minimal_sets(mask, lambda m: _ext_stable(test, t, m, mask))


def minimal_stable_sets(s: SolutionLike, t: Tournament) -> StableSetReport:
    return _report(s, t, minimal_stable_masks(s, t, t.full))


# top cycle -----------------------------------------------------------------


def top_cycle_mask(t: Tournament, mask: int) -> int:
    """Start from the Copeland set and add dominators until nothing new appears."""
    cols = t.cols
    b = c = copeland_mask(t, mask)
    while True:
        nxt = 0
        for a in iter_bits(c):
            nxt |= cols[a]
        c = nxt & mask & ~b
        if not c:
            return b
        b |= c


def top_cycle_by_reachability(t: Tournament, mask: int) -> int:
    """Alternatives from which every member is reachable along dominance paths."""
    rows = t.rows
    out = 0
    for a in iter_bits(mask):
        seen = frontier = 1 << a
        while frontier:
            nxt = 0
            for b in iter_bits(frontier):
                nxt |= rows[b]
            frontier = nxt & mask & ~seen
            seen |= frontier
        if seen == mask:
            out |= 1 << a
    return out


def top_cycle(t: Tournament) -> frozenset:
    return to_set(top_cycle_mask(t, t.full))


def dominant_sets(t: Tournament) -> list:
    """All ``B`` with ``B > A \\ B`` (including ``A``), by increasing size."""
    rows = t.rows
    out = []
    for m in range(1, t.full + 1):
        rest = t.full & ~m
        if all(rows[a] & rest == rest for a in iter_bits(m)):
            out.append(m)
    out.sort(key=popcount)
    return [to_set(m) for m in out]


# minimal covering set ------------------------------------------------------


def minimal_covering_mask(t: Tournament, mask: int) -> int:
    """Grow the bipartisan set by the bipartisan set of the still-uncovered outsiders."""
    b = bipartisan_mask(t, mask)
    while True:
        fresh = 0
        for a in iter_bits(mask & ~b):
            if uc_member(t, b | 1 << a, a):
                fresh |= 1 << a
        if not fresh:
            return b
        b |= bipartisan_mask(t, fresh)


def minimal_covering_set(t: Tournament) -> frozenset:
    return to_set(minimal_covering_mask(t, t.full))


# minimal extending set -----------------------------------------------------


def minimal_extending_masks(t: Tournament, mask: int) -> list:
    limit = exact_cap(ME_CAP)
    if popcount(mask) > limit:
        raise OrderTooLargeForExact("ME", popcount(mask), limit)
    return minimal_sets(mask, lambda m: _ext_stable(banks_member, t, m, mask))


def minimal_extending_mask(t: Tournament, mask: int) -> int:
    out = 0
    for m in minimal_extending_masks(t, mask):
        out |= m
    return out


def minimal_extending_set(t: Tournament) -> StableSetReport:
    return _report("BA", t, minimal_extending_masks(t, t.full))
