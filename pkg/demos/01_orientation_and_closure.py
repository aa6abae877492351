"""
Orientations, triples and the closure
=====================================

Four points, three known triples, and the interiority rule fills in the fourth.
"""
from otgraphs import Orientation, PointSet, TripleStore, close, emit_proof, order_type_of

# point 3 sits inside the triangle 0 1 2
s = PointSet([(0, 0), (10, 0), (4, 9), (4, 3)])
ot = order_type_of(s)
for key, o in ot.known():
    print(tuple(key), o.name)

# forget the orientation of 0 1 2 and let the axioms recover it
seed = TripleStore(4)
for key, o in ot.known():
    if tuple(key) != (0, 1, 2):
        seed.assert_triple(*key, o)
print("seeded", seed.known_count, "of", seed.size)

closed, trace, status = close(seed, trace=True)
print("status:", status.value)
print(emit_proof(trace, seed), end="")
assert closed.get(0, 1, 2) is Orientation.CCW

# the same seed with only the structural axioms stays incomplete
from otgraphs import AXIOMS_123
print("structural axioms only:", close(seed, AXIOMS_123)[2].value)
