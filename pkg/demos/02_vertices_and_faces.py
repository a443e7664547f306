"""
Vertices, faces and facets
==========================

Each polytope is the convex hull of the characteristic vectors of one class.
``check_face`` decides validity and returns the dimension of the face.
"""
from orderpoly import polytope as pt
from orderpoly.primaryineq import parse_inequality

vs = pt.build(3, "so")
print(len(vs), "vertices, dimension", vs.dim)
print(vs.matrix[:4])

for text in ("x(1,2)+x(2,3)-x(1,3)<=1", "x(1,2)+x(2,1)<=1", "x(1,2)+x(2,3)<=1"):
    rep = pt.check_face(vs, parse_inequality(text, 3))
    print(f"{text:28s} valid={rep.valid} face_dim={rep.face_dim} facet={rep.is_facet}")

# On the linear ordering polytope x12 + x21 = 1 holds on every vertex
lo = pt.build(3, "lo")
print(pt.check_face(lo, parse_inequality("x(1,2)+x(2,1)<=1", 3)))

# Summing two facets never gives a facet
fs = pt.facets_of(3, "io")
q = fs.facets[0] + fs.facets[5]
print(q, pt.check_face(fs.vs, q).is_facet)
