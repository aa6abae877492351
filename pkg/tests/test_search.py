from collections import Counter
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from otgraphs import (AXIOMS_123, AXIOMS_45, AXIOMS_45D, Graph, SearchConfig, Strategy, close,
                      exhaustive_minimum, greedy_ot_graph, is_ot_graph, make_convex, multi_run, order_type_of,
                      prune_to_minimal, random_ot_graph, seed_triples)
from otgraphs.errors import NotFound
from otgraphs.search import greedy_run, random_run

from conftest import db_order_types, random_point_set


def mantel_minimum(n):
    # smallest edge set whose complement is triangle-free, by brute force over complements
    pairs = list(combinations(range(n), 2))
    for k in range(len(pairs) + 1):
        for keep in combinations(pairs, k):
            comp = set(pairs) - set(keep)
            if not any({(a, b), (a, c), (b, c)} <= comp for a, b, c in combinations(range(n), 3)):
                return k


def test_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(greedy_iterations=-1)
    with pytest.raises(ValueError):
        SearchConfig(greedy_iterations=0, random_iterations=0)
    SearchConfig(greedy_iterations=0, random_iterations=0, exhaustive_max_size=3)


def test_three_points_need_one_edge():
    ot = order_type_of(random_point_set(np.random.default_rng(1), 3))
    for fn in (random_ot_graph, greedy_ot_graph):
        assert fn(ot).size == 1
    assert exhaustive_minimum(ot).size == 1


def test_searches_are_deterministic(rng):
    ot = order_type_of(random_point_set(rng, 8))
    cfg = SearchConfig(rng_seed=77, greedy_iterations=5, random_iterations=5)
    assert multi_run(ot, cfg) == multi_run(ot, cfg)
    assert random_ot_graph(ot, cfg) == random_ot_graph(ot, cfg)
    assert greedy_ot_graph(ot, cfg) == greedy_ot_graph(ot, cfg)


def test_pair_counter_matches_brute_force(rng):
    snapshots = []

    def check(eng):
        known = eng.cc != 0
        n = eng.n
        for a, b in combinations(range(n), 2):
            unknown = sum(1 for c in range(n) if c not in (a, b) and not known[a, b, c])
            assert eng.pc[a, b] == eng.pc[b, a] == unknown
            assert 0 <= unknown <= n - 2
        snapshots.append(int(eng.pc.max()))

    for n in (4, 5, 6):
        for _ in range(5):
            cube = order_type_of(random_point_set(rng, n)).to_cube()
            greedy_run(cube, AXIOMS_45D, rng, on_select=check)
            assert snapshots[0] == n - 2
            snapshots.clear()


@pytest.mark.parametrize("rules", [AXIOMS_123, AXIOMS_45, AXIOMS_45D], ids=lambda r: r.label())
def test_incremental_closure_equals_closure_from_scratch(rules, rng):
    for _ in range(20):
        n = int(rng.integers(4, 8))
        ot = order_type_of(random_point_set(rng, n))
        cube = ot.to_cube()
        for run in (random_run, greedy_run):
            g, eng = run(cube, rules, rng)
            closed, _, _ = close(seed_triples(g, ot), rules)
            assert eng.store() == closed == ot


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(4, 8))
def test_results_are_ot_graphs(seed, n):
    rng = np.random.default_rng(seed)
    ot = order_type_of(random_point_set(rng, n))
    cfg = SearchConfig(rng_seed=seed, greedy_iterations=2, random_iterations=2)
    for res in (random_ot_graph(ot, cfg), greedy_ot_graph(ot, cfg), multi_run(ot, cfg)):
        assert is_ot_graph(res.graph, ot) and res.size == res.graph.m
    assert multi_run(ot, cfg).is_minimal


def test_exhaustive_never_beaten(rng):
    for ot in db_order_types(6):
        ex = exhaustive_minimum(ot)
        assert ex.is_proven_minimum and ex.strategy is Strategy.EXHAUSTIVE
        h = multi_run(ot, SearchConfig(rng_seed=3, greedy_iterations=3, random_iterations=3))
        assert ex.size <= h.size


def test_exhaustive_respects_cap():
    ot = make_convex(6).order_type()
    with pytest.raises(NotFound):
        exhaustive_minimum(ot, max_size=3)
    assert exhaustive_minimum(ot, max_size=4).size == 4


def test_exhaustive_database_rows():
    assert [exhaustive_minimum(ot).size for ot in db_order_types(5)] == [3, 3, 3]
    sizes = Counter(exhaustive_minimum(ot).size for ot in db_order_types(6))
    assert sizes == {4: 14, 5: 2}


@pytest.mark.parametrize("n", [4, 5, 6])
def test_structural_axioms_alone_match_mantel(n, rng):
    expected = mantel_minimum(n)
    assert expected == (n // 2) * ((n - 1) // 2)
    for _ in range(3):
        ot = order_type_of(random_point_set(rng, n))
        assert exhaustive_minimum(ot, AXIOMS_123).size == expected


def test_random_runs_find_two_edges_for_four_points():
    for ot in db_order_types(4):
        best = min(random_ot_graph(ot, seed=s).size for s in range(200))
        assert best == 2


def test_convex_six_random_best_of_many():
    ot = make_convex(6).order_type()
    cfg = SearchConfig(greedy_iterations=0, random_iterations=1000)
    assert multi_run(ot, cfg).size == 4


def test_greedy_first_pick_is_uniform():
    # every pair starts with n - 2 unknown triples, so the first edge is a uniform tie-break
    cube = make_convex(7).order_type().to_cube()
    firsts = Counter()
    for s in range(420):
        calls = []

        def grab(eng):
            if len(calls) == 1:
                zero = [(a, b) for a, b in combinations(range(7), 2) if eng.pc[a, b] == 0]
                firsts[zero[0] if len(zero) == 1 else None] += 1
            calls.append(1)

        greedy_run(cube, AXIOMS_45D, np.random.default_rng(s), on_select=grab)
    assert None not in firsts
    assert len(firsts) == 21 and min(firsts.values()) >= 5


def test_multi_run_with_one_random_run():
    rng = np.random.default_rng(5)
    ot = order_type_of(random_point_set(rng, 8))
    cfg = SearchConfig(rng_seed=99, greedy_iterations=0, random_iterations=1)
    raw = random_ot_graph(ot, cfg)
    res = multi_run(ot, cfg)
    assert res.graph == prune_to_minimal(raw.graph, ot)
    assert res.seed_used == 99 and res.strategy is Strategy.RANDOM and not res.is_proven_minimum


def test_multi_run_exhaustive_certifies_minimum():
    ot = make_convex(6).order_type()
    res = multi_run(ot, SearchConfig(greedy_iterations=3, random_iterations=3, exhaustive_max_size=6))
    assert res.size == 4 and res.is_proven_minimum


def test_convex_position_lower_bound():
    # two consecutive hull points cannot both be isolated, so at least ceil(n/4) edges
    for n in (4, 5, 6, 7):
        size = exhaustive_minimum(make_convex(n).order_type()).size
        assert size >= -(-n // 4)


def test_graph_from_greedy_closes_under_each_rule_set(rng):
    ot = order_type_of(random_point_set(rng, 7))
    for rules in (AXIOMS_123, AXIOMS_45, AXIOMS_45D):
        res = greedy_ot_graph(ot, SearchConfig(rules=rules, rng_seed=1))
        assert is_ot_graph(res.graph, ot, rules)
        if rules is AXIOMS_123:
            assert res.size >= (7 // 2) * (6 // 2)
    assert isinstance(res.graph, Graph)
