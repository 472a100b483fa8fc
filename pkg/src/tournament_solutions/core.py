"""Tournaments, decompositions, isomorphism, enumeration and majority graphs.

A :class:`Tournament` on ``n`` alternatives ``0..n-1`` stores one bitmask per
alternative: bit ``j`` of ``rows[i]`` is set iff ``i`` dominates ``j``.  Every
solver in the package works on such masks, so restricting a tournament to a
subset never copies anything; the subset is just another mask.

Labeled enumeration order
-------------------------
The unordered pairs ``(i, j)`` with ``i < j`` are listed row-major
(``(0,1), (0,2), ..., (0,n-1), (1,2), ...``).  A tournament's *code* is the
integer whose bit string, most significant bit first, has a ``1`` at the
position of pair ``(i, j)`` iff ``i`` dominates ``j``.  ``enumerate_tournaments``
in labeled mode yields codes ``0, 1, ..., 2**(n(n-1)/2) - 1`` in order, i.e.
lexicographically over the upper-triangle bit string.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence, TextIO, Union

import numpy as np

from .bits import iter_bits, popcount, to_mask, to_set
from .errors import (
    AlternativeOutOfRange,
    ArityMismatch,
    EmptySet,
    EmptyTournament,
    EvenElectorate,
    InconsistentAlternativeSets,
    MalformedInput,
    NotAProduct,
    NotATournament,
    OrderTooLarge,
)

MAX_ORDER = 64
LABELED_MAX_ORDER = 8
CANONICAL_MAX_ORDER = 7

DOMINION = "dominion"
DOMINATORS = "dominators"


class Tournament:
    """Complete asymmetric dominance relation on ``0..n-1`` (immutable)."""

    __slots__ = ("_rows", "_cols", "_full")

    def __init__(self, rows: Sequence[int]):
        n = len(rows)
        if n == 0:
            raise EmptyTournament("a tournament needs at least one alternative")
        if n > MAX_ORDER:
            raise OrderTooLarge(f"order {n} exceeds the data-model cap {MAX_ORDER}")
        full = (1 << n) - 1
        rows = tuple(int(r) for r in rows)
        cols = [0] * n
        for i, r in enumerate(rows):
            if r & ~full:
                raise NotATournament(f"row {i} refers to alternatives outside 0..{n - 1}")
            if r >> i & 1:
                raise NotATournament(f"alternative {i} dominates itself")
            for j in iter_bits(r):
                cols[j] |= 1 << i
        for i in range(n):
            if rows[i] & cols[i]:
                j = (rows[i] & cols[i]).bit_length() - 1
                raise NotATournament(f"both {i}>{j} and {j}>{i}")
            if (rows[i] | cols[i] | 1 << i) != full:
                j = (full & ~(rows[i] | cols[i] | 1 << i)).bit_length() - 1
                raise NotATournament(f"pair ({i},{j}) is not oriented")
        self._rows = rows
        self._cols = tuple(cols)
        self._full = full

    # construction ---------------------------------------------------------

    @classmethod
    def from_matrix(cls, matrix) -> "Tournament":
        m = np.asarray(matrix, dtype=bool)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise MalformedInput("adjacency matrix must be square")
        return cls([to_mask(np.flatnonzero(row)) for row in m])

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple]) -> "Tournament":
        rows = [0] * n
        for a, b in edges:
            rows[a] |= 1 << b
        return cls(rows)

    @classmethod
    def transitive(cls, n: int) -> "Tournament":
        """``i`` dominates ``j`` iff ``i < j``."""
        full = (1 << n) - 1
        return cls([full & ~((2 << i) - 1) for i in range(n)])

    @classmethod
    def cycle3(cls) -> "Tournament":
        return cls([0b010, 0b100, 0b001])

    @classmethod
    def circulant(cls, n: int, steps: Iterable[int]) -> "Tournament":
        rows = [0] * n
        for i in range(n):
            for s in steps:
                rows[i] |= 1 << ((i + s) % n)
        return cls(rows)

    @classmethod
    def from_code(cls, n: int, code: int) -> "Tournament":
        rows = [0] * n
        bit = n * (n - 1) // 2 - 1
        for i in range(n):
            for j in range(i + 1, n):
                if code >> bit & 1:
                    rows[i] |= 1 << j
                else:
                    rows[j] |= 1 << i
                bit -= 1
        return cls(rows)

    @classmethod
    def random(cls, n: int, rng) -> "Tournament":
        """Uniformly random labeled tournament; ``rng`` is a ``random.Random``."""
        return cls.from_code(n, rng.getrandbits(n * (n - 1) // 2) if n > 1 else 0)

    # accessors ------------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self._rows)

    order = n

    @property
    def rows(self) -> tuple:
        return self._rows

    @property
    def cols(self) -> tuple:
        return self._cols

    @property
    def full(self) -> int:
        return self._full

    @property
    def alternatives(self) -> frozenset:
        return frozenset(range(self.n))

    def beats(self, a: int, b: int) -> bool:
        return bool(self._rows[a] >> b & 1)

    def check(self, a: int) -> None:
        if not 0 <= a < self.n:
            raise AlternativeOutOfRange(f"alternative {a} not in 0..{self.n - 1}")

    def scores(self) -> tuple:
        return tuple(popcount(r) for r in self._rows)

    def is_regular(self) -> bool:
        return len(set(self.scores())) == 1

    @property
    def code(self) -> int:
        return self.induced_code(self._full)

    def induced_code(self, mask: int) -> int:
        """Code of the sub-tournament induced by ``mask`` after relabeling to 0..k-1."""
        members = list(iter_bits(mask))
        code = 0
        rows = self._rows
        for p, a in enumerate(members):
            r = rows[a]
            for b in members[p + 1:]:
                code = code << 1 | (r >> b & 1)
        return code

    def matrix(self) -> np.ndarray:
        n = self.n
        m = np.zeros((n, n), dtype=bool)
        for i, r in enumerate(self._rows):
            for j in iter_bits(r):
                m[i, j] = True
        return m

    def edges(self) -> list:
        return [(i, j) for i, r in enumerate(self._rows) for j in iter_bits(r)]

    def restrict(self, members) -> tuple:
        """Sub-tournament on ``members`` (mask or iterable) relabeled to 0..k-1.

        Returns ``(sub, labels)`` where ``labels[i]`` is the original alternative.
        """
        mask = members if isinstance(members, int) else to_mask(members)
        if mask == 0:
            raise EmptySet("cannot restrict to the empty set")
        labels = tuple(iter_bits(mask))
        pos = {a: i for i, a in enumerate(labels)}
        rows = []
        for a in labels:
            rows.append(to_mask(pos[b] for b in iter_bits(self._rows[a] & mask)))
        return Tournament(rows), labels

    def relabel(self, perm: Sequence[int]) -> "Tournament":
        """Tournament in which ``perm[i]`` plays the role of ``i``."""
        n = self.n
        if sorted(perm) != list(range(n)):
            raise MalformedInput("relabeling must be a permutation of 0..n-1")
        rows = [0] * n
        for i, r in enumerate(self._rows):
            rows[perm[i]] = to_mask(perm[j] for j in iter_bits(r))
        return Tournament(rows)

    def flip(self, a: int, b: int) -> "Tournament":
        """Copy with the edge between ``a`` and ``b`` reversed."""
        rows = list(self._rows)
        bit_a, bit_b = 1 << a, 1 << b
        rows[a] ^= bit_b
        rows[b] ^= bit_a
        return Tournament(rows)

    # dunder ---------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Tournament) and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"Tournament(n={self.n}, code={self.code})"

    def to_text(self) -> str:
        return format_tournament(self)


# ---------------------------------------------------------------------------
# matrix file format


def _content_lines(text: str) -> list:
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            lines.append(line)
    return lines


def parse_tournament(text: Union[str, TextIO]) -> Tournament:
    """Parse the matrix file format: ``n`` then ``n`` rows over ``{0,1}``."""
    if not isinstance(text, str):
        text = text.read()
    lines = _content_lines(text)
    if not lines:
        raise MalformedInput("missing order line")
    try:
        n = int(lines[0])
    except ValueError:
        raise MalformedInput(f"order line is not an integer: {lines[0]!r}") from None
    if n == 0:
        raise EmptyTournament("order 0")
    if n < 0:
        raise MalformedInput("negative order")
    if n > MAX_ORDER:
        raise OrderTooLarge(f"order {n} exceeds the data-model cap {MAX_ORDER}")
    body = lines[1:]
    if len(body) != n:
        raise MalformedInput(f"expected {n} matrix rows, found {len(body)}")
    rows = []
    for i, line in enumerate(body):
        if len(line) != n:
            raise MalformedInput(f"row {i + 1} has length {len(line)}, expected {n}")
        if set(line) - {"0", "1"}:
            raise MalformedInput(f"row {i + 1} contains characters outside {{0,1}}")
        rows.append(sum(1 << j for j, ch in enumerate(line) if ch == "1"))
    for i in range(n):
        if rows[i] >> i & 1:
            raise NotATournament(f"diagonal entry ({i + 1},{i + 1}) is 1")
        for j in range(i + 1, n):
            if (rows[i] >> j & 1) == (rows[j] >> i & 1):
                raise NotATournament(f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) are equal")
    return Tournament(rows)


def format_tournament(t: Tournament, comments: Sequence[str] = ()) -> str:
    out = [f"# {c}" for c in comments]
    out.append(str(t.n))
    for r in t.rows:
        out.append("".join("1" if r >> j & 1 else "0" for j in range(t.n)))
    return "\n".join(out) + "\n"


def read_tournament(path) -> Tournament:
    with open(path, encoding="utf-8") as fh:
        return parse_tournament(fh.read())


# ---------------------------------------------------------------------------
# neighborhoods


def neighborhood(t: Tournament, a: int, direction: str = DOMINION, within=None) -> frozenset:
    t.check(a)
    mask = t.full if within is None else (within if isinstance(within, int) else to_mask(within))
    if direction == DOMINION:
        return to_set(t.rows[a] & mask)
    if direction == DOMINATORS:
        return to_set(t.cols[a] & mask)
    raise ValueError(f"direction must be {DOMINION!r} or {DOMINATORS!r}")


def dominion(t: Tournament, a: int, within=None) -> frozenset:
    return neighborhood(t, a, DOMINION, within)


def dominators(t: Tournament, a: int, within=None) -> frozenset:
    return neighborhood(t, a, DOMINATORS, within)


def condorcet_winner_mask(t: Tournament, mask: int) -> int:
    """Mask of the undominated alternative within ``mask`` (0 if none)."""
    cols = t.cols
    m = mask
    while m:
        low = m & -m
        if not cols[low.bit_length() - 1] & mask:
            return low
        m ^= low
    return 0


def condorcet_winner(t: Tournament) -> Optional[int]:
    w = condorcet_winner_mask(t, t.full)
    return w.bit_length() - 1 if w else None


# ---------------------------------------------------------------------------
# components, decompositions, products


@dataclass(frozen=True)
class Decomposition:
    blocks: tuple
    summary: Tournament

    def __post_init__(self):
        if len(self.blocks) != self.summary.n:
            raise ArityMismatch("summary order must equal the number of blocks")


def is_component(t: Tournament, b) -> bool:
    mask = b if isinstance(b, int) else to_mask(b)
    if mask == 0:
        raise EmptySet("a component is non-empty")
    if mask & ~t.full:
        raise AlternativeOutOfRange("set contains alternatives outside the tournament")
    for a in iter_bits(t.full & ~mask):
        d = t.rows[a] & mask
        if d and d != mask:
            return False
    return True


def summary(t: Tournament, blocks: Sequence) -> Decomposition:
    """Summary tournament of ``t`` with respect to a decomposition into ``blocks``."""
    masks = [b if isinstance(b, int) else to_mask(b) for b in blocks]
    seen = 0
    for m in masks:
        if m == 0 or m & seen:
            raise NotAProduct("blocks must be non-empty and pairwise disjoint")
        if not is_component(t, m):
            raise NotAProduct(f"{sorted(to_set(m))} is not a component")
        seen |= m
    if seen != t.full:
        raise NotAProduct("blocks do not cover all alternatives")
    k = len(masks)
    rows = [0] * k
    for i in range(k):
        rep = masks[i] & -masks[i]
        rep_i = rep.bit_length() - 1
        for j in range(k):
            if i != j and t.rows[rep_i] & masks[j]:
                rows[i] |= 1 << j
    return Decomposition(tuple(to_set(m) for m in masks), Tournament(rows))


def product(summary_t: Tournament, parts: Sequence[Tournament]) -> tuple:
    """Substitute ``parts[i]`` for alternative ``i`` of ``summary_t``.

    Blocks are laid out contiguously in the order of ``parts``.
    """
    if not parts or len(parts) != summary_t.n:
        raise ArityMismatch(f"need {summary_t.n} parts, got {len(parts)}")
    offsets = list(itertools.accumulate([0] + [p.n for p in parts]))
    block_masks = [((1 << p.n) - 1) << offsets[i] for i, p in enumerate(parts)]
    rows = []
    for i, p in enumerate(parts):
        outside = 0
        for j in iter_bits(summary_t.rows[i]):
            outside |= block_masks[j]
        for r in p.rows:
            rows.append(r << offsets[i] | outside)
    t = Tournament(rows)
    return t, Decomposition(tuple(to_set(m) for m in block_masks), summary_t)


# ---------------------------------------------------------------------------
# isomorphism


def are_isomorphic(t1: Tournament, t2: Tournament) -> Optional[tuple]:
    """A relabeling ``pi`` with ``i > j`` in t1 iff ``pi[i] > pi[j]`` in t2, or None."""
    n = t1.n
    if n != t2.n:
        return None
    s1, s2 = t1.scores(), t2.scores()
    if sorted(s1) != sorted(s2):
        return None
    by_score = {}
    for v, s in enumerate(s2):
        by_score.setdefault(s, []).append(v)
    order = sorted(range(n), key=lambda v: (len(by_score[s1[v]]), v))
    pi = [-1] * n
    used = 0
    r1, r2 = t1.rows, t2.rows

    def extend(depth: int) -> bool:
        nonlocal used
        if depth == n:
            return True
        v = order[depth]
        for w in by_score[s1[v]]:
            if used >> w & 1:
                continue
            ok = True
            for u in order[:depth]:
                if (r1[v] >> u & 1) != (r2[w] >> pi[u] & 1):
                    ok = False
                    break
            if ok:
                pi[v] = w
                used |= 1 << w
                if extend(depth + 1):
                    return True
                used &= ~(1 << w)
                pi[v] = -1
        return False

    return tuple(pi) if extend(0) else None


def canonical_code(t: Tournament) -> int:
    """Minimum code over relabelings that list alternatives by ascending score.

    Restricting to score-sorted relabelings keeps the form an isomorphism
    invariant (isomorphic tournaments share score classes) while pruning the
    ``n!`` search.
    """
    scores = t.scores()
    classes = {}
    for v, s in enumerate(scores):
        classes.setdefault(s, []).append(v)
    groups = [classes[s] for s in sorted(classes)]
    best = None
    rows = t.rows
    for choice in itertools.product(*(itertools.permutations(g) for g in groups)):
        seq = [v for part in choice for v in part]
        code = 0
        for p, a in enumerate(seq):
            r = rows[a]
            for b in seq[p + 1:]:
                code = code << 1 | (r >> b & 1)
        if best is None or code < best:
            best = code
    return best


@lru_cache(maxsize=None)
def _canonical_codes(n: int) -> tuple:
    if n == 1:
        return (0,)
    found = set()
    for code in _canonical_codes(n - 1):
        base = Tournament.from_code(n - 1, code).rows
        new = n - 1
        for dom in range(1 << (n - 1)):
            rows = [r | (0 if dom >> i & 1 else 1 << new) for i, r in enumerate(base)]
            rows.append(dom)
            found.add(canonical_code(Tournament(rows)))
    return tuple(sorted(found))


def enumerate_tournaments(order: int, mode: str = "labeled") -> Iterator[Tournament]:
    """Stream every tournament of the given order.

    ``labeled`` yields all ``2**(n(n-1)/2)`` labeled tournaments by increasing
    code; ``canonical`` yields one representative per isomorphism class, the member
    whose code equals :func:`canonical_code`, by increasing code.
    """
    if order < 1:
        raise EmptyTournament("order must be at least 1")
    if mode == "labeled":
        if order > LABELED_MAX_ORDER:
            raise OrderTooLarge(f"labeled enumeration capped at order {LABELED_MAX_ORDER}")
        for code in range(1 << (order * (order - 1) // 2)):
            yield Tournament.from_code(order, code)
    elif mode == "canonical":
        if order > CANONICAL_MAX_ORDER:
            raise OrderTooLarge(f"canonical enumeration capped at order {CANONICAL_MAX_ORDER}")
        for code in _canonical_codes(order):
            yield Tournament.from_code(order, code)
    else:
        raise ValueError("mode must be 'labeled' or 'canonical'")


# ---------------------------------------------------------------------------
# preference profiles


@dataclass(frozen=True)
class PreferenceProfile:
    """Voters' linear orders over ``0..n-1``, most preferred first."""

    voters: tuple

    def __post_init__(self):
        voters = tuple(tuple(int(x) for x in v) for v in self.voters)
        object.__setattr__(self, "voters", voters)
        if not voters:
            raise InconsistentAlternativeSets("a profile needs at least one voter")
        alts = sorted(voters[0])
        if alts != list(range(len(alts))) or not alts:
            raise InconsistentAlternativeSets("voter 1 does not rank 0..n-1 exactly once")
        for k, v in enumerate(voters[1:], start=2):
            if sorted(v) != alts:
                raise InconsistentAlternativeSets(f"voter {k} ranks a different alternative set")

    @property
    def n(self) -> int:
        return len(self.voters[0])


def parse_profile(text: Union[str, TextIO]) -> PreferenceProfile:
    """Profile file: ``n`` then one voter per line as a permutation of 1..n."""
    if not isinstance(text, str):
        text = text.read()
    lines = _content_lines(text)
    if not lines:
        raise MalformedInput("missing order line")
    try:
        n = int(lines[0])
        voters = [tuple(int(tok) - 1 for tok in line.split()) for line in lines[1:]]
    except ValueError:
        raise MalformedInput("profile entries must be integers") from None
    for k, v in enumerate(voters, start=1):
        if sorted(v) != list(range(n)):
            raise InconsistentAlternativeSets(f"voter {k} is not a permutation of 1..{n}")
    return PreferenceProfile(tuple(voters))


def mcgarvey(p: PreferenceProfile) -> Tournament:
    """Pairwise strict-majority tournament of an odd electorate."""
    if len(p.voters) % 2 == 0:
        raise EvenElectorate(f"{len(p.voters)} voters: majority ties are possible")
    n = p.n
    wins = np.zeros((n, n), dtype=int)
    for order in p.voters:
        rank = np.empty(n, dtype=int)
        rank[list(order)] = np.arange(n)
        wins += rank[:, None] < rank[None, :]
    return Tournament.from_matrix(2 * wins > len(p.voters))


def exact_cap(default: int) -> int:
    """Brute-force order cap; the ``TK_MAX_ORDER`` environment variable overrides it."""
    env = os.environ.get("TK_MAX_ORDER")
    return int(env) if env else default
