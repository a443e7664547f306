"""
Order classes on a small ground set
===================================

Relations are stored as bitmasks over the arcs (i, j), i != j, in
lexicographic order.  Five nested classes are available.
"""
from orderpoly.relations import (
    CLASS_CHAIN,
    Relation,
    contains_three_plus_one,
    contains_two_plus_two,
    enumerate_relations,
    find_unit_representation,
    format_relation,
)

# Sizes along the chain LO, SWO, SO, IO, PO
for n in (3, 4, 5):
    print(n, [len(enumerate_relations(n, c)) for c in CLASS_CHAIN])

# The two forbidden posets on four elements
two_two = Relation.from_pairs(4, [(1, 2), (3, 4)])
three_one = Relation.from_pairs(4, [(1, 2), (2, 3), (1, 3)])
print(format_relation(two_two), contains_two_plus_two(two_two))
print(format_relation(three_one), contains_three_plus_one(three_one))

# A semiorder has unit intervals: (i, j) in S iff f(i) + 1 < f(j)
s = Relation.from_pairs(4, [(1, 3), (1, 4), (2, 4)])
rep = find_unit_representation(s)
print([str(x) for x in rep.f])
print(find_unit_representation(three_one))
