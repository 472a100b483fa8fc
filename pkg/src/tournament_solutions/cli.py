"""Command-line frontend: ``solve``, ``sweep``, ``mcgarvey`` and ``banks-element``.

Alternatives are printed 1-based.  Exit codes: 0 success, 1 hard violation in
a sweep, 2 bad input or configuration, 3 a solver's exact-order cap exceeded,
4 even electorate.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import fixtures
from .bits import format_set
from .core import Tournament, format_tournament, mcgarvey, parse_profile, parse_tournament
from .errors import EvenElectorate, OrderTooLargeForExact, TournamentError
from .game import equilibrium
from .qualified import banks_element
from .solutions import SolutionId, mask_solver, parse_solution

EXIT_OK = 0
EXIT_HARD = 1
EXIT_CONFIG = 2
EXIT_TOO_LARGE = 3
EXIT_EVEN = 4

BUILTIN = {
    "transitive-triple": lambda: Tournament.transitive(3),
    "3-cycle": Tournament.cycle3,
}


class ConfigError(Exception):
    pass


def _read_text(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    try:
        with open(source, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read {source}: {exc.strerror}") from None


def load_input(source: str) -> Tournament:
    """A path, ``-`` for stdin, a shipped fixture (F1, F2, F3) or a built-in name."""
    if source.upper() in fixtures.NAMES:
        return fixtures.load(source)
    if source.lower() in BUILTIN:
        return BUILTIN[source.lower()]()
    return parse_tournament(_read_text(source))


def _solutions(text: Optional[str]) -> list:
    if not text:
        return list(SolutionId)
    try:
        return [parse_solution(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def _orders(text: str) -> tuple:
    lo, sep, hi = text.partition("..")
    try:
        pair = (int(lo), int(hi if sep else lo))
    except ValueError:
        raise ConfigError(f"--orders expects a..b, got {text!r}") from None
    if pair[0] < 1 or pair[1] < pair[0]:
        raise ConfigError(f"bad order range {text!r}")
    return pair


def cmd_solve(args, out) -> int:
    t = load_input(args.input)
    for sid in _solutions(args.solutions):
        try:
            chosen = mask_solver(sid)(t, t.full)
        except OrderTooLargeForExact as exc:
            print(f"error: {exc.solver} cannot run exactly: {exc}", file=sys.stderr)
            return EXIT_TOO_LARGE
        out.write(f"{sid.value}: {format_set(chosen)}\n")
        if sid is SolutionId.BP and args.strategy:
            s = equilibrium(t)
            pairs = " ".join(f"{i + 1}:{p.numerator}/{p.denominator}" for i, p in enumerate(s.probabilities))
            out.write(f"BP strategy: {pairs}\n")
    return EXIT_OK


def cmd_sweep(args, out) -> int:
    from .lab import sweep

    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    if not checks:
        raise ConfigError("--checks is empty")
    if args.sample is not None and args.sample < 1:
        raise ConfigError("--sample must be positive")
    if args.jobs < 1:
        raise ConfigError("--jobs must be positive")
    try:
        report = sweep(
            _orders(args.orders),
            mode=args.mode,
            checks=checks,
            sample=args.sample,
            seed=args.seed,
            jobs=args.jobs,
        )
    except OrderTooLargeForExact:
        raise
    except (ValueError, TournamentError) as exc:
        raise ConfigError(str(exc)) from None
    out.write(report.body())
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(report.render())
    return EXIT_HARD if report.hard_violations else EXIT_OK


def cmd_mcgarvey(args, out) -> int:
    profile = parse_profile(_read_text(args.input))
    try:
        t = mcgarvey(profile)
    except EvenElectorate as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EVEN
    out.write(format_tournament(t))
    return EXIT_OK


def cmd_banks_element(args, out) -> int:
    t = load_input(args.input)
    out.write(f"BA element: {banks_element(t, args.seed) + 1}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tournament-solutions", description="Tournament solution solvers and checks.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="print choice sets for a tournament")
    s.add_argument("--input", required=True, help="matrix file, '-', F1/F2/F3, transitive-triple or 3-cycle")
    s.add_argument("--solutions", help="comma-separated: cnl,co,uc,ucinf,ba,tc,mc,me,bp,teq (default all)")
    s.add_argument("--strategy", action="store_true", help="with bp, also print the exact equilibrium")
    s.set_defaults(run=cmd_solve)

    w = sub.add_parser("sweep", help="run harness checks over many tournaments")
    w.add_argument("--orders", required=True, help="order range a..b")
    w.add_argument("--mode", choices=("labeled", "canonical"), default="labeled")
    w.add_argument("--checks", default="inclusions", help="comma-separated check names")
    w.add_argument("--sample", type=int, help="random tournaments per order instead of enumeration")
    w.add_argument("--seed", type=int, default=0)
    w.add_argument("--jobs", type=int, default=1)
    w.add_argument("--output", help="also write the report, with timings, to this file")
    w.set_defaults(run=cmd_sweep)

    m = sub.add_parser("mcgarvey", help="majority tournament of a preference profile")
    m.add_argument("--input", required=True, help="profile file or '-'")
    m.set_defaults(run=cmd_mcgarvey)

    b = sub.add_parser("banks-element", help="one Banks-set member by greedy chain building")
    b.add_argument("--input", required=True)
    b.add_argument("--seed", type=int, default=0)
    b.set_defaults(run=cmd_banks_element)
    return p


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.run(args, out)
    except OrderTooLargeForExact as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except (ConfigError, TournamentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    raise SystemExit(main())
