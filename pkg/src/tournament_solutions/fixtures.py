"""Named example tournaments shipped with the package.

The matrix files under ``data/`` are the canonical encodings; the builder
functions construct the same tournaments from their verbal description and the
test-suite checks that both agree.  Alternatives are 0-based here, so the
human-facing label ``k`` is alternative ``k - 1``.
"""

from importlib import resources

from .core import Tournament, parse_tournament, product

NAMES = ("F1", "F2", "F3")


def build_f1() -> Tournament:
    """Three 3-cycle blocks in a cycle of blocks, plus a tenth alternative
    that beats only the third member of every block."""
    edges = []
    blocks = [(0, 1, 2), (3, 4, 5), (6, 7, 8)]
    for a, b, c in blocks:
        edges += [(a, b), (b, c), (c, a)]
    for i, j in [(0, 1), (1, 2), (2, 0)]:
        edges += [(x, y) for x in blocks[i] for y in blocks[j]]
    for x in range(9):
        edges.append((9, x) if x in (2, 5, 8) else (x, 9))
    return Tournament.from_edges(10, edges)


def build_f2() -> Tournament:
    """Transitive order on eight alternatives with five reversed edges."""
    reversed_pairs = {(8, 4), (7, 3), (6, 2), (7, 1), (8, 1)}
    edges = []
    for i in range(1, 9):
        for j in range(i + 1, 9):
            edges.append((j - 1, i - 1) if (j, i) in reversed_pairs else (i - 1, j - 1))
    return Tournament.from_edges(8, edges)


def build_f3() -> Tournament:
    """A 3-cycle component above a fourth alternative, which beats a fifth,
    which in turn beats the whole 3-cycle."""
    t, _ = product(Tournament.cycle3(), [Tournament.cycle3(), Tournament([0]), Tournament([0])])
    return t


def load(name: str) -> Tournament:
    name = name.upper()
    if name not in NAMES:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(NAMES)}")
    text = resources.files(__package__).joinpath("data", f"{name.lower()}.txt").read_text("utf-8")
    return parse_tournament(text)


def path(name: str):
    """Filesystem path of a shipped fixture file (usable as CLI input)."""
    return resources.files(__package__).joinpath("data", f"{name.lower()}.txt")
