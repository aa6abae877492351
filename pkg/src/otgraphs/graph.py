"""OT-graphs: edge sets over an order type, their halfplane annotations,
the OT-graph and minimality predicates, and exit graphs."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from . import _kernel as K
from .closure import AXIOMS_45D, Engine, RuleSet, Status
from .errors import FormatError, NotAnOTGraph
from .geometry import PointSet, format_points
from .triples import AssertResult, Orientation, TripleStore, sorted_triples


class Graph:
    """Undirected simple graph on vertices ``0..n-1``; edges kept sorted."""

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        self.n = n
        es = set()
        for e in edges:
            a, b = int(e[0]), int(e[1])
            if a == b:
                raise ValueError(f"self-loop at {a}")
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge {(a, b)} out of range for n={n}")
            es.add((a, b) if a < b else (b, a))
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(es))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, combinations(range(n), 2))

    @property
    def m(self) -> int:
        return len(self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def __contains__(self, e) -> bool:
        a, b = e
        return ((a, b) if a < b else (b, a)) in self.edges

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"

    def without(self, e) -> "Graph":
        a, b = e
        key = (a, b) if a < b else (b, a)
        return Graph(self.n, (x for x in self.edges if x != key))

    def with_edge(self, e) -> "Graph":
        return Graph(self.n, self.edges + (tuple(e),))

    def adjacency(self) -> np.ndarray:
        adj = np.zeros((self.n, self.n), dtype=np.bool_)
        for a, b in self.edges:
            adj[a, b] = adj[b, a] = True
        return adj

    def edge_array(self) -> np.ndarray:
        return np.array(self.edges, dtype=np.int64).reshape(-1, 2)

    def complement(self) -> "Graph":
        return Graph(self.n, (e for e in combinations(range(self.n), 2) if e not in self.edges))


@dataclass(frozen=True)
class EdgePartition:
    edge: tuple[int, int]
    plus_side: tuple[int, ...]
    minus_side: tuple[int, ...]


@dataclass
class AnnotatedGraph:
    graph: Graph
    partitions: dict[tuple[int, int], EdgePartition] = field(default_factory=dict)
    points: Optional[PointSet] = None

    @property
    def n(self) -> int:
        return self.graph.n

    def seed_store(self) -> TripleStore:
        """Triples fixed by the partitions; raises FormatError if two edges disagree."""
        store = TripleStore(self.n)
        for (a, b), part in self.partitions.items():
            for c in part.plus_side:
                if store.assert_triple(a, b, c, Orientation.CCW) is AssertResult.CONTRADICTION:
                    raise FormatError(f"partitions disagree on triple {a} {b} {c}")
            for c in part.minus_side:
                if store.assert_triple(a, b, c, Orientation.CW) is AssertResult.CONTRADICTION:
                    raise FormatError(f"partitions disagree on triple {a} {b} {c}")
        return store


def _cube(ot: Union[TripleStore, np.ndarray]) -> np.ndarray:
    return ot if isinstance(ot, np.ndarray) else ot.to_cube()


def seed_triples(g: Graph, ot: TripleStore) -> TripleStore:
    """The triples with at least one pair forming an edge of ``g``, oriented as in ``ot``."""
    if g.n != ot.n:
        raise ValueError("graph and order type sizes differ")
    if ot.n < 3:
        return TripleStore(ot.n)
    adj = g.adjacency()
    tr = sorted_triples(ot.n)
    i, j, k = tr[:, 0], tr[:, 1], tr[:, 2]
    touched = adj[i, j] | adj[i, k] | adj[j, k]
    return TripleStore(ot.n, np.where(touched, ot.table, 0))


def is_ot_graph(g: Graph, ot: Union[TripleStore, np.ndarray], rules: RuleSet = AXIOMS_45D) -> bool:
    """Whether the closure of the triples touching ``g`` recovers every triple of ``ot``."""
    cube = _cube(ot)
    if cube.shape[0] < 3:
        return True
    if g.n != cube.shape[0]:
        raise ValueError("graph and order type sizes differ")
    return bool(K.closure_complete(cube, g.edge_array(), *rules.flags))


def closure_status(g: Graph, ot: TripleStore, rules: RuleSet = AXIOMS_45D) -> Status:
    eng = Engine(ot.n, rules)
    cube = ot.to_cube()
    for a, b in g.edges:
        eng.seed_edge(cube, a, b)
    eng.run()
    return eng.status()


def is_minimal(g: Graph, ot: Union[TripleStore, np.ndarray], rules: RuleSet = AXIOMS_45D) -> bool:
    """True iff ``g`` is an OT-graph and no single edge can be dropped."""
    cube = _cube(ot)
    if not is_ot_graph(g, cube, rules):
        raise NotAnOTGraph(f"{g} is not an OT-graph under rules {rules.label()}")
    return not any(is_ot_graph(g.without(e), cube, rules) for e in g.edges)


def prune_to_minimal(g: Graph, ot: Union[TripleStore, np.ndarray], rules: RuleSet = AXIOMS_45D,
                     order: Union[str, Sequence[tuple[int, int]]] = "descending",
                     rng: Optional[np.random.Generator] = None) -> Graph:
    """Greedily drop edges while the graph stays an OT-graph.

    ``order`` is ``"descending"`` (reverse sorted edge order), ``"random"``
    (shuffled with ``rng``) or an explicit edge sequence.  A single pass is
    enough: removability only shrinks as edges are removed.
    """
    cube = _cube(ot)
    if not is_ot_graph(g, cube, rules):
        raise NotAnOTGraph(f"{g} is not an OT-graph under rules {rules.label()}")
    if isinstance(order, str):
        if order == "descending":
            seq = list(reversed(g.edges))
        elif order == "random":
            rng = rng if rng is not None else np.random.default_rng()
            seq = [g.edges[i] for i in rng.permutation(len(g.edges))]
        else:
            raise ValueError(f"unknown edge order {order!r}")
    else:
        seq = [tuple(sorted(e)) for e in order]
        if sorted(seq) != list(g.edges):
            raise ValueError("explicit order must list every edge exactly once")
    if cube.shape[0] < 3:
        return Graph(g.n)
    arr = np.array(seq, dtype=np.int64).reshape(-1, 2)
    keep = K.prune_edges(cube, arr, *rules.flags)
    return Graph(g.n, arr[keep].tolist())


def exit_edges(s: Union[PointSet, np.ndarray]) -> dict[tuple[int, int], list[int]]:
    """Map each exit edge ``(a, b)``, ``a < b``, to its witnesses.

    ``c`` witnesses ``(a, b)`` when no other point ``p`` has line ``ap``
    separating ``b`` from ``c`` or line ``bp`` separating ``a`` from ``c``.
    """
    cube = s.cube() if isinstance(s, PointSet) else s
    n = cube.shape[0]
    out: dict[tuple[int, int], list[int]] = {}
    for a, b in combinations(range(n), 2):
        ok = (cube[a, :, b][:, None] == cube[a, :, :]) & (cube[b, :, a][:, None] == cube[b, :, :])
        ok[[a, b], :] = True
        np.fill_diagonal(ok, True)
        good = ok.all(axis=0)
        good[[a, b]] = False
        wit = np.flatnonzero(good).tolist()
        if wit:
            out[(a, b)] = wit
    return out


def exit_graph(s: Union[PointSet, np.ndarray]) -> Graph:
    cube = s.cube() if isinstance(s, PointSet) else s
    return Graph(cube.shape[0], exit_edges(cube))


def partition_of(a: int, b: int, cube: np.ndarray) -> EdgePartition:
    side = cube[a, b]
    plus = tuple(int(c) for c in np.flatnonzero(side == 1))
    minus = tuple(int(c) for c in np.flatnonzero(side == -1))
    return EdgePartition((a, b), plus, minus)


def annotate(g: Graph, s: Union[PointSet, TripleStore]) -> AnnotatedGraph:
    """Attach the halfplane partition of every edge (from coordinates or an order type)."""
    if isinstance(s, PointSet):
        if len(s) != g.n:
            raise ValueError("graph and point set sizes differ")
        # PointSet construction already rejected collinear triples
        cube = s.cube()
        points = s
    else:
        cube = s.to_cube()
        points = None
    parts = {e: partition_of(*e, cube) for e in g.edges}
    return AnnotatedGraph(g, parts, points)


def format_annotated(ag: AnnotatedGraph, with_points: bool = True) -> str:
    lines = [f"{ag.n} {ag.graph.m}\n"]
    if with_points and ag.points is not None:
        lines.append(format_points(ag.points).split("\n", 1)[1])
    for e in ag.graph.edges:
        part = ag.partitions[e]
        s = f"{e[0]} {e[1]} |"
        if part.plus_side:
            s += " " + " ".join(map(str, part.plus_side))
        s += " |"
        if part.minus_side:
            s += " " + " ".join(map(str, part.minus_side))
        lines.append(s + "\n")
    return "".join(lines)


def parse_annotated(text: str) -> AnnotatedGraph:
    """Inverse of :func:`format_annotated`; validates every partition."""
    raw = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not raw:
        raise FormatError("empty graph file")
    try:
        n, m = (int(v) for v in raw[0].split())
    except ValueError:
        raise FormatError(f"bad graph header: {raw[0]!r}") from None
    body = raw[1:]
    coord_lines = [ln for ln in body if "|" not in ln]
    edge_lines = [ln for ln in body if "|" in ln]
    if len(edge_lines) != m:
        raise FormatError(f"expected {m} edge lines, found {len(edge_lines)}")
    if coord_lines and len(coord_lines) != n:
        raise FormatError(f"expected {n} coordinate lines, found {len(coord_lines)}")
    points = None
    if coord_lines:
        try:
            points = PointSet([tuple(int(v) for v in ln.split()) for ln in coord_lines])
        except ValueError as exc:
            raise FormatError(f"bad coordinates: {exc}") from None
    parts = {}
    edges = []
    for ln in edge_lines:
        segs = ln.split("|")
        if len(segs) != 3:
            raise FormatError(f"bad edge line: {ln!r}")
        try:
            a, b = (int(v) for v in segs[0].split())
            plus = tuple(int(v) for v in segs[1].split())
            minus = tuple(int(v) for v in segs[2].split())
        except ValueError:
            raise FormatError(f"bad edge line: {ln!r}") from None
        key = (min(a, b), max(a, b))
        if key != (a, b):
            raise FormatError(f"edge must be written with a < b: {ln!r}")
        if sorted(plus + minus) != [c for c in range(n) if c not in key] or len(set(plus + minus)) != n - 2:
            raise FormatError(f"partition of edge {key} does not cover the other points")
        if list(plus) != sorted(plus) or list(minus) != sorted(minus):
            raise FormatError(f"partition sides must be sorted: {ln!r}")
        parts[key] = EdgePartition(key, plus, minus)
        edges.append(key)
    g = Graph(n, edges)
    if g.m != m:
        raise FormatError("duplicate edges")
    ag = AnnotatedGraph(g, parts, points)
    if points is not None:
        cube = points.cube()
        for e, part in parts.items():
            if partition_of(*e, cube) != part:
                raise FormatError(f"partition of edge {e} disagrees with the coordinates")
    return ag


def certifies_order_type(ag: AnnotatedGraph, rules: RuleSet = AXIOMS_45D) -> tuple[bool, TripleStore]:
    """Close the partitions alone (no coordinates); True if every triple is decided."""
    eng = Engine(ag.n, rules)
    eng.load(ag.seed_store())
    eng.run()
    return eng.status() is Status.COMPLETE, eng.store()
