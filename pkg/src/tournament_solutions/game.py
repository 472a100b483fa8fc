"""Tournament games and the bipartisan set.

The equilibrium of a symmetric zero-sum game is found as a feasible point of

    sum_j s_j * m_ij <= 0   for every row i
    sum_j s_j = 1,  s >= 0

with a phase-one primal simplex using Bland's rule.  The tableau is pivoted
fraction-free in exact integers and converted to ``Fraction`` only at the end.
Nothing is ever rounded, so the support of the returned strategy is
exact; for tournament games the equilibrium is unique.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .bits import iter_bits, to_set
from .core import Tournament, condorcet_winner_mask
from .errors import DimensionMismatch, Infeasible, MalformedInput


@dataclass(frozen=True)
class TournamentGame:
    payoff: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.payoff)
        object.__setattr__(self, "payoff", rows)
        n = len(rows)
        for i, r in enumerate(rows):
            if len(r) != n:
                raise DimensionMismatch("payoff matrix must be square")
            for j, x in enumerate(r):
                if x != -rows[j][i]:
                    raise MalformedInput(f"payoff not skew-symmetric at ({i},{j})")

    @property
    def n(self) -> int:
        return len(self.payoff)


@dataclass(frozen=True)
class Strategy:
    """Mixed strategy with exact rational weights (reduced by ``Fraction``)."""

    probabilities: tuple

    def __post_init__(self):
        probs = tuple(Fraction(p) for p in self.probabilities)
        object.__setattr__(self, "probabilities", probs)
        if any(p < 0 for p in probs):
            raise MalformedInput("negative probability")
        if sum(probs) != 1:
            raise MalformedInput("probabilities must sum to exactly 1")

    def support(self) -> frozenset:
        return frozenset(i for i, p in enumerate(self.probabilities) if p > 0)

    def serialize(self) -> str:
        """``index:num/den`` pairs for every alternative, ascending, space-separated."""
        return " ".join(f"{i}:{p.numerator}/{p.denominator}" for i, p in enumerate(self.probabilities))

    @classmethod
    def parse(cls, text: str) -> "Strategy":
        pairs = []
        for tok in text.split():
            idx, _, frac = tok.partition(":")
            num, _, den = frac.partition("/")
            try:
                pairs.append((int(idx), Fraction(int(num), int(den))))
            except (ValueError, ZeroDivisionError):
                raise MalformedInput(f"bad strategy entry {tok!r}") from None
        pairs.sort()
        if [i for i, _ in pairs] != list(range(len(pairs))):
            raise MalformedInput("strategy indices must be 0..n-1")
        return cls(tuple(p for _, p in pairs))


def tournament_game(t: Tournament) -> TournamentGame:
    n = t.n
    rows = t.rows
    return TournamentGame(
        tuple(tuple(0 if i == j else (1 if rows[i] >> j & 1 else -1) for j in range(n)) for i in range(n))
    )


def _feasible_point(m: Sequence[Sequence[int]]) -> list:
    """Phase-one simplex for ``M s + w = 0, sum s + art = 1``; minimise ``art``.

    Columns: s_0..s_{n-1}, w_0..w_{n-1}, art, rhs.  The tableau is kept in
    integers by fraction-free pivoting: after each pivot every entry equals
    the true rational entry times the current pivot product ``det``, and the
    division by the previous pivot is always exact.  Bland's rule (smallest
    entering index, smallest basic index on ratio ties) prevents cycling on
    this highly degenerate system.
    """
    n = len(m)
    ncols = 2 * n + 1
    rhs = ncols
    tab = []
    for i in range(n):
        row = [int(x) for x in m[i]] + [0] * (n + 2)
        row[n + i] = 1
        tab.append(row)
    tab.append([1] * n + [0] * n + [1, 1])
    # objective row of "minimise art" after pricing out the basic artificial
    cost = [-x for x in tab[n]]
    cost[2 * n] = 0
    tab.append(cost)
    basis = list(range(n, 2 * n)) + [2 * n]
    det = 1
    while True:
        cost = tab[n + 1]
        enter = next((j for j in range(ncols) if cost[j] < 0), None)
        if enter is None:
            break
        leave = None
        for i in range(n + 1):
            a = tab[i][enter]
            if a > 0:
                if leave is None:
                    leave = i
                    continue
                # compare rhs_i / a with rhs_leave / a_leave without dividing
                lhs = tab[i][rhs] * tab[leave][enter]
                cur = tab[leave][rhs] * a
                if lhs < cur or (lhs == cur and basis[i] < basis[leave]):
                    leave = i
        if leave is None:
            raise Infeasible("phase-one objective unbounded")
        prow = tab[leave]
        piv = prow[enter]
        for i in range(n + 2):
            if i == leave:
                continue
            r = tab[i]
            f = r[enter]
            if f:
                tab[i] = [(x * piv - f * y) // det for x, y in zip(r, prow)]
            elif piv != det:
                tab[i] = [x * piv // det for x in r]
        det = piv
        basis[leave] = enter
    values = [0] * ncols
    for i, b in enumerate(basis):
        values[b] = tab[i][rhs]
    if values[2 * n] != 0:
        raise Infeasible("no strategy satisfies the equilibrium system")
    return [Fraction(v, det) for v in values[:n]]


def solve_symmetric_game(g: TournamentGame) -> Strategy:
    return Strategy(tuple(_feasible_point(g.payoff)))


def verify_equilibrium(g: TournamentGame, s: Strategy) -> bool:
    """Exact check of the equilibrium system plus complementary slackness."""
    n = g.n
    p = s.probabilities
    if len(p) != n:
        raise DimensionMismatch(f"strategy has {len(p)} entries, game has {n} actions")
    if sum(p) != 1 or any(x < 0 for x in p):
        return False
    for i in range(n):
        v = sum(m * x for m, x in zip(g.payoff[i], p))
        if v > 0 or (p[i] > 0 and v != 0):
            return False
    return True


def bipartisan_mask(t: Tournament, mask: int) -> int:
    w = condorcet_winner_mask(t, mask)
    if w:
        return w
    members = list(iter_bits(mask))
    rows = t.rows
    m = [[0 if a == b else (1 if rows[a] >> b & 1 else -1) for b in members] for a in members]
    s = _feasible_point(m)
    out = 0
    for a, x in zip(members, s):
        if x > 0:
            out |= 1 << a
    return out


def equilibrium(t: Tournament) -> Strategy:
    return solve_symmetric_game(tournament_game(t))


def bipartisan(t: Tournament) -> frozenset:
    return to_set(bipartisan_mask(t, t.full))
