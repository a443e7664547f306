"""
Median orders of a profile
==========================

The remoteness of P to a profile is the total symmetric difference.  It is
affine in the characteristic vector of P, so a median is a maximiser of
c . x over the polytope.
"""
from orderpoly import median as med
from orderpoly.relations import Relation, enumerate_relations

prof = med.Profile.of([
    Relation.from_pairs(3, [(1, 2), (2, 3), (1, 3)]),
    Relation.from_pairs(3, [(2, 3), (3, 1), (2, 1)]),
    Relation.from_pairs(3, [(3, 1), (1, 2), (3, 2)]),
])
c = med.c_vector(prof)
print("c =", c)

for cls in ("lo", "swo", "so", "po"):
    res = med.median_order(prof, cls)
    print(cls, res.value, [str(r) for r in res.medians])

# remoteness + c . chi does not depend on P
vals = {med.remoteness(p, prof) + med.linear_value(c, p) for p in enumerate_relations(3, "po")}
print(vals)
