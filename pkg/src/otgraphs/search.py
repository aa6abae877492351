"""Search for small OT-graphs.

Two incremental heuristics grow a graph one edge at a time while keeping the
closure up to date (each triple is processed once per run, so a run costs
the same as one closure):

* :func:`random_ot_graph` takes edges from a shuffled pool, skipping pairs
  whose triples are all known already;
* :func:`greedy_ot_graph` takes the pair with the most unknown triples,
  breaking ties at random.

:func:`exhaustive_minimum` is the exact oracle for small n, and
:func:`multi_run` repeats the heuristics and keeps the smallest pruned graph.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from itertools import combinations
from typing import Callable, Optional, Union

import numpy as np

from . import _kernel as K
from .closure import AXIOMS_45D, Engine, RuleSet
from .errors import NotFound
from .graph import Graph, is_minimal, is_ot_graph, prune_to_minimal
from .triples import TripleStore


class Strategy(enum.Enum):
    RANDOM = "random"
    GREEDY = "greedy"
    EXHAUSTIVE = "exhaustive"


@dataclass(frozen=True)
class SearchConfig:
    rules: RuleSet = AXIOMS_45D
    rng_seed: int = 0
    greedy_iterations: int = 100
    random_iterations: int = 100
    exhaustive_max_size: Optional[int] = None

    def __post_init__(self):
        if self.greedy_iterations < 0 or self.random_iterations < 0:
            raise ValueError("iteration counts must be non-negative")
        if self.greedy_iterations == 0 and self.random_iterations == 0 and self.exhaustive_max_size is None:
            raise ValueError("at least one search strategy must be enabled")

    def with_seed(self, seed: int) -> "SearchConfig":
        return replace(self, rng_seed=seed)


# greedy-phase budgets per n for full database runs
GREEDY_ITERATIONS = {7: 300, 8: 1200, 9: 10000}


@dataclass(frozen=True)
class SearchResult:
    graph: Graph
    size: int
    strategy: Strategy
    seed_used: int
    is_minimal: bool
    is_proven_minimum: bool


def _cube(ot: Union[TripleStore, np.ndarray]) -> np.ndarray:
    return ot if isinstance(ot, np.ndarray) else ot.to_cube()


def _trivial(n: int, strategy: Strategy, seed: int) -> SearchResult:
    return SearchResult(Graph(n), 0, strategy, seed, True, strategy is Strategy.EXHAUSTIVE)


def random_run(cube: np.ndarray, rules: RuleSet, rng: np.random.Generator) -> tuple[Graph, Engine]:
    """One pass of the randomized incremental algorithm; returns the graph and final state."""
    n = cube.shape[0]
    eng = Engine(n, rules, pair_counter=True)
    pairs = list(combinations(range(n), 2))
    order = rng.permutation(len(pairs))
    edges = []
    for i in order:
        if eng.is_complete():
            break
        a, b = pairs[i]
        if eng.pc[a, b] == 0:
            continue  # every triple through ab is already known
        edges.append((a, b))
        eng.seed_edge(cube, a, b)
        eng.run(stop_when_complete=True)
    return Graph(n, edges), eng


def greedy_run(cube: np.ndarray, rules: RuleSet, rng: np.random.Generator,
               on_select: Optional[Callable[[Engine], None]] = None) -> tuple[Graph, Engine]:
    """One pass of the counter-array greedy algorithm."""
    n = cube.shape[0]
    eng = Engine(n, rules, pair_counter=True)
    upper = np.triu(np.ones((n, n), dtype=np.bool_), 1)
    edges = []
    while not eng.is_complete():
        if on_select is not None:
            on_select(eng)
        counts = np.where(upper, eng.pc, -1)
        best = counts.max()
        cand = np.flatnonzero(counts == best)
        pick = cand[rng.integers(len(cand))] if len(cand) > 1 else cand[0]
        a, b = divmod(int(pick), n)
        edges.append((a, b))
        eng.seed_edge(cube, a, b)
        eng.run(stop_when_complete=True)
    return Graph(n, edges), eng


def _result(g: Graph, cube: np.ndarray, rules: RuleSet, strategy: Strategy, seed: int) -> SearchResult:
    assert is_ot_graph(g, cube, rules)
    return SearchResult(g, g.m, strategy, seed, is_minimal(g, cube, rules), False)


def random_ot_graph(ot: Union[TripleStore, np.ndarray], cfg: SearchConfig = SearchConfig(),
                    seed: Optional[int] = None) -> SearchResult:
    cube = _cube(ot)
    seed = cfg.rng_seed if seed is None else seed
    if cube.shape[0] < 3:
        return _trivial(cube.shape[0], Strategy.RANDOM, seed)
    g, _ = random_run(cube, cfg.rules, np.random.default_rng(seed))
    return _result(g, cube, cfg.rules, Strategy.RANDOM, seed)


def greedy_ot_graph(ot: Union[TripleStore, np.ndarray], cfg: SearchConfig = SearchConfig(),
                    seed: Optional[int] = None) -> SearchResult:
    cube = _cube(ot)
    seed = cfg.rng_seed if seed is None else seed
    if cube.shape[0] < 3:
        return _trivial(cube.shape[0], Strategy.GREEDY, seed)
    g, _ = greedy_run(cube, cfg.rules, np.random.default_rng(seed))
    return _result(g, cube, cfg.rules, Strategy.GREEDY, seed)


def exhaustive_minimum(ot: Union[TripleStore, np.ndarray], rules: RuleSet = AXIOMS_45D,
                       max_size: Optional[int] = None) -> SearchResult:
    """Smallest OT-graph by enumerating edge subsets in order of size.

    Within a size, subsets are tried in lexicographic order of the sorted
    pair list, so the result is the lexicographically first minimum graph.
    Raises :class:`NotFound` if none has at most ``max_size`` edges.
    """
    cube = _cube(ot)
    n = cube.shape[0]
    if n < 3:
        return _trivial(n, Strategy.EXHAUSTIVE, 0)
    pairs = np.array(list(combinations(range(n), 2)), dtype=np.int64)
    cap = len(pairs) if max_size is None else min(max_size, len(pairs))
    if K.closure_complete(cube, pairs[:0], *rules.flags):
        return _trivial(n, Strategy.EXHAUSTIVE, 0)
    for k in range(1, cap + 1):
        idx = K.first_ot_subset(cube, pairs, k, *rules.flags)
        if len(idx):
            g = Graph(n, pairs[idx].tolist())
            return SearchResult(g, k, Strategy.EXHAUSTIVE, 0, True, True)
    raise NotFound(f"no OT-graph with at most {cap} edges")


def multi_run(ot: Union[TripleStore, np.ndarray], cfg: SearchConfig = SearchConfig()) -> SearchResult:
    """Greedy runs, then randomized runs; every result is pruned to a minimal graph.

    Run ``i`` (greedy runs first) uses seed ``cfg.rng_seed + i``.  The first
    smallest graph wins.
    """
    cube = _cube(ot)
    n = cube.shape[0]
    if n < 3:
        return _trivial(n, Strategy.GREEDY, cfg.rng_seed)
    rules = cfg.rules
    best: Optional[SearchResult] = None
    pruned: dict[Graph, Graph] = {}
    plan = [(Strategy.GREEDY, greedy_run)] * cfg.greedy_iterations
    plan += [(Strategy.RANDOM, random_run)] * cfg.random_iterations
    for i, (strategy, run) in enumerate(plan):
        seed = (cfg.rng_seed + i) % 2**64
        raw, _ = run(cube, rules, np.random.default_rng(seed))
        g = pruned.get(raw)
        if g is None:
            g = prune_to_minimal(raw, cube, rules)
            pruned[raw] = g
        if best is None or g.m < best.size:
            best = SearchResult(g, g.m, strategy, seed, True, False)
    if best is None:
        return exhaustive_minimum(cube, rules, cfg.exhaustive_max_size)
    if cfg.exhaustive_max_size is not None and cfg.exhaustive_max_size >= 0:
        try:
            ex = exhaustive_minimum(cube, rules, min(cfg.exhaustive_max_size, best.size - 1))
        except NotFound:
            # nothing smaller exists; the heuristic result is a minimum
            if cfg.exhaustive_max_size >= best.size - 1:
                best = replace(best, is_proven_minimum=True)
        else:
            best = ex
    assert is_ot_graph(best.graph, cube, rules)
    return best
