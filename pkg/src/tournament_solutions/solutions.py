"""Registry mapping solution names to their mask-level solvers.

A mask-level solver has the signature ``fn(t, mask) -> mask`` and solves the
sub-tournament induced by ``mask``.  Solution arguments throughout the package
accept a :class:`SolutionId`, one of its case-insensitive aliases, or such a
callable directly.
"""

from __future__ import annotations

from enum import Enum
from typing import Callable, Union

from .bits import to_mask, to_set
from .core import Tournament


class SolutionId(str, Enum):
    CNL = "CNL"
    CO = "CO"
    UC = "UC"
    UC_INF = "UC_INF"
    BA = "BA"
    TC = "TC"
    MC = "MC"
    ME = "ME"
    BP = "BP"
    TEQ = "TEQ"

    def __str__(self) -> str:
        return self.value


_ALIASES = {
    "cnl": SolutionId.CNL,
    "co": SolutionId.CO,
    "uc": SolutionId.UC,
    "ucinf": SolutionId.UC_INF,
    "uc_inf": SolutionId.UC_INF,
    "ba": SolutionId.BA,
    "tc": SolutionId.TC,
    "mc": SolutionId.MC,
    "me": SolutionId.ME,
    "bp": SolutionId.BP,
    "teq": SolutionId.TEQ,
}

MaskSolver = Callable[[Tournament, int], int]
SolutionLike = Union[SolutionId, str, MaskSolver]


def parse_solution(name: Union[str, SolutionId]) -> SolutionId:
    if isinstance(name, SolutionId):
        return name
    try:
        return _ALIASES[name.strip().lower()]
    except KeyError:
        raise ValueError(f"unknown solution {name!r}; expected one of {', '.join(_ALIASES)}") from None


def _me_mask(t: Tournament, mask: int) -> int:
    from .stable import minimal_extending_mask

    return minimal_extending_mask(t, mask)


def _teq_mask(t: Tournament, mask: int) -> int:
    from .teq import teq_mask

    return teq_mask(t, mask)


def mask_solver(s: SolutionLike) -> MaskSolver:
    if callable(s) and not isinstance(s, (str, SolutionId)):
        return s
    from . import game, qualified, stable

    sid = parse_solution(s)
    return {
        SolutionId.CNL: qualified.cnl_mask,
        SolutionId.CO: qualified.copeland_mask,
        SolutionId.UC: qualified.uncovered_mask,
        SolutionId.UC_INF: qualified.iterated_uncovered_mask,
        SolutionId.BA: qualified.banks_mask,
        SolutionId.TC: stable.top_cycle_mask,
        SolutionId.MC: stable.minimal_covering_mask,
        SolutionId.ME: _me_mask,
        SolutionId.BP: game.bipartisan_mask,
        SolutionId.TEQ: _teq_mask,
    }[sid]


def member_test(s: SolutionLike) -> Callable[[Tournament, int, int], bool]:
    """``test(t, mask, a)``: is ``a`` chosen in the sub-tournament ``mask``?

    Uses a dedicated single-alternative check where one exists.
    """
    from . import qualified

    if not callable(s) or isinstance(s, (str, SolutionId)):
        sid = parse_solution(s)
        if sid is SolutionId.UC:
            return qualified.uc_member
        if sid is SolutionId.BA:
            return qualified.banks_member
        if sid is SolutionId.CNL:
            return lambda t, mask, a: mask == 1 << a or bool(t.rows[a] & mask)
    fn = mask_solver(s)
    return lambda t, mask, a: bool(fn(t, mask) >> a & 1)


def name_of(s: SolutionLike) -> str:
    if callable(s) and not isinstance(s, (str, SolutionId)):
        return getattr(s, "__name__", "custom")
    return parse_solution(s).value


def solve(s: SolutionLike, t: Tournament, within=None) -> frozenset:
    if within is None:
        mask = t.full
    else:
        mask = within if isinstance(within, int) else to_mask(within)
    return to_set(mask_solver(s)(t, mask))


def trivial_mask(t: Tournament, mask: int) -> int:
    """The solution that chooses every alternative."""
    return mask
