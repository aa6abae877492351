"""Explicit OT-graphs: convex hull cycles, sparse convex graphs with
floor(2n/3) edges, and two-clique graphs for the structural axioms alone."""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

import numpy as np

from .closure import AXIOMS_45D, RuleSet
from .errors import CollinearOrDegenerate, ConstructionFailed, DegenerateInstance
from .geometry import PointSet
from .graph import Graph, is_ot_graph
from .triples import TripleStore


@dataclass(frozen=True)
class ConvexInstance:
    n: int
    points: PointSet

    def order_type(self) -> TripleStore:
        # every sorted triple is CCW
        from math import comb

        return TripleStore(self.n, np.ones(comb(self.n, 3), dtype=np.int8))


def make_convex(n: int, scale: int = 10**6) -> ConvexInstance:
    """``n`` grid points on a circle, indexed counterclockwise."""
    if not 3 <= n <= 30:
        raise ValueError("n must be in [3, 30]")
    for attempt in range(4):
        r = scale * 10**attempt
        pts = [(round(r * math.cos(2 * math.pi * i / n)), round(r * math.sin(2 * math.pi * i / n)))
               for i in range(n)]
        try:
            ps = PointSet(pts)
        except CollinearOrDegenerate:
            continue
        tr = np.array(list(combinations(range(n), 3)))
        if np.all(ps.cube()[tr[:, 0], tr[:, 1], tr[:, 2]] == 1):
            return ConvexInstance(n, ps)
    raise DegenerateInstance(f"could not snap {n} convex points to the grid")


def hull_graph(inst: ConvexInstance) -> Graph:
    n = inst.n
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def _hull_edges(n: int, keep) -> Graph:
    return Graph(n, ((j, (j + 1) % n) for j in keep))


def small_convex_candidate(n: int) -> Graph:
    """Sparse convex pattern with floor(2n/3) edges.

    For n = 3k it is the cycle through the points ``j % 3 != 2``: hull edges
    ``(3i, 3i+1)`` joined by chords over every third point.  For n = 3k+r
    (r = 1, 2) the points ``2 .. 2+r`` form a short hull path and the rest
    (from ``r+3`` round to ``1``) a path of the same skip-every-third shape.
    """
    if n < 6:
        raise ValueError("n must be at least 6")
    r = n % 3
    if r == 0:
        keep = [v for v in range(n) if v % 3 != 2]
        return Graph(n, ((keep[i], keep[(i + 1) % len(keep)]) for i in range(len(keep))))
    head = list(range(2, 3 + r))
    start = r + 3
    tail = [v for v in list(range(start, n)) + [0, 1] if v < start or (v - start) % 3 != 2]
    edges = list(zip(head, head[1:])) + list(zip(tail, tail[1:]))
    return Graph(n, edges)


def small_convex_graph(inst: ConvexInstance, rules: RuleSet = AXIOMS_45D,
                       fallback: bool = True, hull_only: bool = False) -> Graph:
    """A verified OT-graph with floor(2n/3) edges on a convex instance.

    Tries :func:`small_convex_candidate` first, then (with ``fallback``)
    every hull-edge subset of that size in lexicographic order.  With
    ``hull_only`` the candidate is skipped, so only hull edges are used.
    """
    n = inst.n
    if n < 6:
        raise ValueError("n must be at least 6")
    ot = inst.order_type().to_cube()
    if not hull_only:
        g = small_convex_candidate(n)
        if is_ot_graph(g, ot, rules):
            return g
    if fallback or hull_only:
        for keep in combinations(range(n), 2 * n // 3):
            g = _hull_edges(n, keep)
            if is_ot_graph(g, ot, rules):
                return g
    raise ConstructionFailed(f"no {2 * n // 3}-edge graph found for n={n} under rules {rules.label()}")


def e123(n: int) -> int:
    """Minimum OT-graph size when only the structural axioms are used."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return (n // 2) * ((n - 1) // 2)


def two_clique_graph(n: int) -> Graph:
    """Cliques on the first ceil(n/2) indices and on the rest."""
    if n < 2:
        raise ValueError("n must be at least 2")
    h = (n + 1) // 2
    return Graph(n, list(combinations(range(h), 2)) + list(combinations(range(h, n), 2)))


def construct(kind: str, n: int, rules: Optional[RuleSet] = None) -> tuple[Graph, ConvexInstance, RuleSet]:
    """Dispatch used by the command line: ``hull``, ``small-convex`` or ``two-clique``."""
    from .closure import AXIOMS_123

    inst = make_convex(n)
    if kind == "hull":
        return hull_graph(inst), inst, rules or AXIOMS_45D
    if kind == "small-convex":
        rules = rules or AXIOMS_45D
        return small_convex_graph(inst, rules), inst, rules
    if kind == "two-clique":
        return two_clique_graph(n), inst, rules or AXIOMS_123
    raise ValueError(f"unknown construction {kind!r}")
