"""
Lifting and the exceptional inequality
======================================

Zero-padding a semiorder facet to one more element keeps it a facet, and the
face gains exactly 2n dimensions.  One six-element pattern is valid without
being a facet.
"""
from orderpoly import polytope as pt
from orderpoly import primaryineq as pi

q = pi.axiomatic(4)[2].to_general()
print(q)
for n in range(4, 7):
    print(n, pt.check_face(pt.build(n, "so"), pt.lift_inequality(q, n)).face_dim)

e = pi.exceptional(6)[0]
print(e, len(e.A), len(e.B))
print(pi.classify_pso_fdi(e))
rep = pt.check_face(pt.build(6, "so"), e.to_general())
print(rep.valid, rep.tight_count, rep.face_dim, "of", pt.build(6, "so").dim - 1)

# Relabelled copies are recognised by a pattern matcher
moved = e.relabel((4, 6, 1, 2, 3, 5))
print(pi.exceptional_relabelling(moved.A, moved.B, 6))
