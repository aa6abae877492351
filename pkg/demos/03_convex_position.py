"""
Points in convex position
=========================

The hull cycle is always an OT-graph; floor(2n/3) edges suffice; exhaustive
search gives the true minimum for small n.
"""
import time

from otgraphs import exhaustive_minimum, hull_graph, is_ot_graph, make_convex, small_convex_graph

print(" n  hull  2n/3  minimum")
for n in range(4, 13):
    inst = make_convex(n)
    ot = inst.order_type()
    assert is_ot_graph(hull_graph(inst), ot)
    small = small_convex_graph(inst).m if n >= 6 else "-"
    t = time.perf_counter()
    best = exhaustive_minimum(ot).size if n <= 8 else "?"
    print(f"{n:2d}  {n:4d}  {small!s:>4}  {best!s:>7}   ({time.perf_counter() - t:.1f}s)")

# the sparse pattern for nine points
g = small_convex_graph(make_convex(9))
print("n=9 edges:", g.edges)

# restricted to hull edges the same size only works for six points
try:
    small_convex_graph(make_convex(7), hull_only=True)
except Exception as exc:
    print("hull edges only, n=7:", type(exc).__name__)
