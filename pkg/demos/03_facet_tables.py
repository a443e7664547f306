"""
Counting facets up to relabelling
=================================

Exact double description gives every facet; relabelling classes are counted
by the lexicographically least image under all n! permutations.
"""
import time

from orderpoly import polytope as pt

rows = [(2, "po"), (3, "po"), (3, "io"), (3, "so"), (4, "po"), (4, "io"), (4, "so"),
        (4, "swo"), (4, "lo"), (5, "lo")]
for n, cls in rows:
    t = time.time()
    fs = pt.facets_of(n, cls)
    k = pt.orbit_count(fs.facets, n, fs.equalities)
    print(f"P_{cls}^{n}: {len(fs.facets):4d} facets, {k:3d} classes ({time.time() - t:.1f}s)")

# Linear ordering facets are reported modulo x_ij + x_ji = 1
fs = pt.facets_of(3, "lo")
for q in fs.facets:
    print(q)

# Larger cases are refused instead of running for days
try:
    pt.enumerate_facets(pt.build(5, "swo"))
except pt.SizeGuardError as e:
    print(e)
