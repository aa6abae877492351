"""
Order type 1874: exit graph versus OT-graph
===========================================

Nine points.  The exit graph is fixed by the point set; an OT-graph is found
by search and is much sparser.  Both are written out as SVG.
"""
from pathlib import Path

from otgraphs import (PointSet, SearchConfig, annotate, exit_edges, exit_graph, format_annotated, is_minimal,
                      multi_run, order_type_of, render_svg)
from otgraphs.samples import ORDER_TYPE_1874

out = Path(__file__).with_name("out")
out.mkdir(exist_ok=True)

s = PointSet(ORDER_TYPE_1874)
ot = order_type_of(s)

ex = exit_graph(s)
print("exit graph:", ex.m, "edges")
for (a, b), wits in sorted(exit_edges(s).items()):
    print(f"  {a}-{b} witness {wits}")

res = multi_run(ot, SearchConfig(rng_seed=0, greedy_iterations=300, random_iterations=300))
print("OT-graph:", res.size, "edges, minimal:", is_minimal(res.graph, ot))
print(format_annotated(annotate(res.graph, s)), end="")

# a couple of the supporting lines are enough to read the partitions off the drawing
(out / "1874_ot.svg").write_text(render_svg(res.graph, s, draw_lines=res.graph.edges[:2], title="OT-graph"))
(out / "1874_exit.svg").write_text(render_svg(ex, s, draw_hourglasses=True, title="exit graph"))
print("wrote", out / "1874_ot.svg", "and", out / "1874_exit.svg")
