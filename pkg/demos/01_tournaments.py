"""
Tournaments: building, reading, composing, enumerating
=======================================================
"""

from tournament_solutions import Tournament, fixtures, parse_tournament, product, summary, mcgarvey, parse_profile
from tournament_solutions.core import are_isomorphic, canonical_code, enumerate_tournaments

# the matrix file format: n, then n rows; entry (r, c) is 1 iff r beats c
t = parse_tournament("""
# rock, paper, scissors
3
010
001
100
""")
print(t, t.scores(), t.is_regular())

# the shipped fixtures; printed alternatives elsewhere are 1-based, here 0-based
f3 = fixtures.load("F3")
print(f3.to_text())

# F3 is a 3-cycle summary with a 3-cycle substituted for its first vertex
c3 = Tournament.cycle3()
big, dec = product(c3, [c3, Tournament([0]), Tournament([0])])
print("F3 rebuilt as a product:", big == f3, [sorted(b) for b in dec.blocks])
print("summary recovered:", summary(big, dec.blocks).summary == c3)

# relabel and recognise
u = f3.relabel([4, 0, 3, 1, 2])
print("isomorphism F3 -> relabeled:", are_isomorphic(f3, u))
print("same canonical code:", canonical_code(f3) == canonical_code(u))

# labeled vs canonical counts
for n in range(1, 7):
    labeled = 2 ** (n * (n - 1) // 2)
    classes = sum(1 for _ in enumerate_tournaments(n, "canonical"))
    print(f"order {n}: {labeled:6d} labeled, {classes:3d} up to isomorphism")

# majority graphs: Condorcet's paradox
profile = parse_profile("3\n1 2 3\n2 3 1\n3 1 2\n")
print("majority relation of the paradox profile is the 3-cycle:", mcgarvey(profile) == c3)
