"""Solutions built from maximal qualified subsets.

Condorcet non-losers, the Copeland set, the uncovered set (three independent
computations plus its iteration) and the Banks set.  Each solver has a
``*_mask(t, mask)`` form that solves the sub-tournament induced by ``mask``;
the plain form solves the whole tournament and returns a frozenset.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .bits import iter_bits, popcount, to_set
from .core import Tournament, exact_cap
from .errors import OrderTooLargeForExact

BANKS_CAP = 16


# Condorcet non-losers ------------------------------------------------------


def cnl_mask(t: Tournament, mask: int) -> int:
    if mask & (mask - 1) == 0:
        return mask
    rows = t.rows
    out = 0
    for a in iter_bits(mask):
        if rows[a] & mask:
            out |= 1 << a
    return out


def cnl(t: Tournament) -> frozenset:
    return to_set(cnl_mask(t, t.full))


# Copeland ------------------------------------------------------------------


def copeland_mask(t: Tournament, mask: int) -> int:
    rows = t.rows
    best, out = -1, 0
    for a in iter_bits(mask):
        s = (rows[a] & mask).bit_count()
        if s > best:
            best, out = s, 1 << a
        elif s == best:
            out |= 1 << a
    return out


def copeland_scores(t: Tournament) -> tuple:
    return t.scores()


def copeland(t: Tournament) -> tuple:
    """``(scores, choice set)`` where scores are dominion sizes."""
    return t.scores(), to_set(copeland_mask(t, t.full))


# covering and the uncovered set -------------------------------------------


@dataclass(frozen=True)
class CoveringRelation:
    """``covers[a]`` is the mask of alternatives covered by ``a``."""

    covers: tuple

    def __contains__(self, pair) -> bool:
        a, b = pair
        return bool(self.covers[a] >> b & 1)

    def pairs(self) -> list:
        return [(a, b) for a, m in enumerate(self.covers) for b in iter_bits(m)]


def covering_mask(t: Tournament, mask: int) -> tuple:
    rows = t.rows
    covers = [0] * t.n
    for a in iter_bits(mask):
        da = rows[a] & mask
        for b in iter_bits(da):
            # b in D(a), so a is not in D(b) and containment is automatically strict
            if rows[b] & mask & ~da == 0:
                covers[a] |= 1 << b
    return tuple(covers)


def covering_relation(t: Tournament) -> CoveringRelation:
    return CoveringRelation(covering_mask(t, t.full))


def uncovered_by_covering(t: Tournament, mask: int) -> int:
    covered = 0
    for m in covering_mask(t, mask):
        covered |= m
    return mask & ~covered


def uc_member(t: Tournament, mask: int, a: int) -> bool:
    """Is ``a`` a king of the sub-tournament ``mask``: every member within two steps?"""
    rows = t.rows
    d = rows[a] & mask
    reach = d | 1 << a
    for b in iter_bits(d):
        reach |= rows[b]
        if reach & mask == mask:
            return True
    return reach & mask == mask


def uncovered_mask(t: Tournament, mask: int) -> int:
    out = 0
    for a in iter_bits(mask):
        if uc_member(t, mask, a):
            out |= 1 << a
    return out


def uncovered_by_matrix(t: Tournament, mask: int) -> int:
    """Squared-adjacency computation: rows of ``M @ M + M`` without zeros, where
    ``M`` is the reflexive dominance matrix."""
    members = list(iter_bits(mask))
    sub = t.matrix()[np.ix_(members, members)].astype(np.int64)
    m = sub + np.eye(len(members), dtype=np.int64)
    u = m @ m + m
    out = 0
    for i, a in enumerate(members):
        if np.all(u[i] != 0):
            out |= 1 << a
    return out


def uncovered(t: Tournament) -> frozenset:
    return to_set(uncovered_mask(t, t.full))


def iterated_uncovered_mask(t: Tournament, mask: int) -> int:
    while True:
        nxt = uncovered_mask(t, mask)
        if nxt == mask:
            return mask
        mask = nxt


def iterated_uncovered(t: Tournament) -> frozenset:
    return to_set(iterated_uncovered_mask(t, t.full))


# Banks set -----------------------------------------------------------------


def banks_member(t: Tournament, mask: int, a: int) -> bool:
    """Is ``a`` the top of a transitive subset of ``mask`` that no member of
    ``mask`` dominates entirely?

    Chains grow downwards from ``a``: every new element is dominated by all
    current ones.  ``common`` holds the members dominating the whole chain;
    the chain certifies ``a`` once ``common`` is empty.
    """
    rows, cols = t.rows, t.cols
    common = cols[a] & mask
    if not common:
        return True
    dead = set()

    def grow(cand: int, common: int) -> bool:
        key = (cand, common)
        if key in dead:
            return False
        reach = 0
        for c in iter_bits(cand):
            reach |= rows[c]
        # a common dominator can only be removed by a chain member beating it
        if common & ~reach:
            dead.add(key)
            return False
        for q in iter_bits(cand):
            nxt = common & cols[q]
            if not nxt:
                return True
            sub = cand & rows[q]
            if sub and grow(sub, nxt):
                return True
        dead.add(key)
        return False

    return grow(rows[a] & mask, common)


def banks_mask(t: Tournament, mask: int) -> int:
    cap = exact_cap(BANKS_CAP)
    if popcount(mask) > cap:
        raise OrderTooLargeForExact("BA", popcount(mask), cap)
    out = 0
    for a in iter_bits(mask):
        if banks_member(t, mask, a):
            out |= 1 << a
    return out


def banks(t: Tournament) -> frozenset:
    return to_set(banks_mask(t, t.full))


def banks_element(t: Tournament, seed=0) -> int:
    """Greedy maximal-chain construction returning one Banks-set member.

    The seed drives a ``random.Random``: it picks the starting alternative and
    then, at each step, which common dominator of the chain is appended.
    """
    rng = random.Random(seed)
    cols = t.cols
    a = rng.randrange(t.n)
    common = t.full
    while True:
        common &= cols[a]
        if not common:
            return a
        a = rng.choice(list(iter_bits(common)))
