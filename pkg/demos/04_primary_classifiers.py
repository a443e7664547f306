"""
Deciding primary inequalities without vertices
==============================================

A primary inequality has coefficients and right-hand side in {-1, 0, 1}.
The classifiers use only the combinatorics of the arc sets A and B; the
cross-check compares them with the vertex oracle on every candidate.
"""
from orderpoly import crosscheck as xc
from orderpoly import primaryineq as pi
from orderpoly.primaryineq import PrimaryInequality as P

p = P(3, [(1, 2), (2, 3)], [(1, 3)], 1)
for name, classify in pi.CLASSIFIERS.items():
    print(name, classify(p))

# A 2-path without its shortcut is not valid on any of the three
print(pi.classify_pso_fdi(P(4, [(1, 2), (2, 3)], [], 1)))

# The fence: B is forced by the disjoint arcs of A
f = pi.fence(3, 6)[0]
print(f)
print(sorted(pi.forced_b_c2c3(f.A)) == sorted(f.B), pi.classify_pio(f).fdi)

# Exhaustive agreement at n = 3
for cls in ("po", "io", "so"):
    rep = xc.crosscheck(3, cls)
    print(cls, rep.candidates, "candidates,", rep.fdi, "facets,", len(rep.disagreements), "disagreements")
