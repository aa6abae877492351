from itertools import combinations, permutations
from math import comb

import numpy as np
import pytest
from hypothesis import given, strategies as st

from otgraphs import Orientation, TripleKey, TripleStore, canonicalize, rank, unrank
from otgraphs.errors import DuplicateIndex
from otgraphs.triples import AssertResult, is_complete, sorted_triples


def perm_parity(seq):
    # count inversions
    inv = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
    return 1 if inv % 2 == 0 else -1


def test_canonicalize_examples():
    assert canonicalize(0, 1, 2) == (TripleKey(0, 1, 2), 1)
    assert canonicalize(1, 0, 2) == (TripleKey(0, 1, 2), -1)
    assert canonicalize(2, 0, 1) == (TripleKey(0, 1, 2), 1)


@given(st.lists(st.integers(0, 40), min_size=3, max_size=3, unique=True))
def test_canonicalize_parity_over_all_permutations(idx):
    for p in permutations(idx):
        key, sign = canonicalize(*p)
        assert tuple(key) == tuple(sorted(idx))
        assert sign == perm_parity(p)


def test_canonicalize_rejects_duplicates():
    with pytest.raises(DuplicateIndex):
        canonicalize(3, 1, 3)


def test_rank_is_a_bijection():
    n = 12
    ranks = [rank(*t) for t in combinations(range(n), 3)]
    assert sorted(ranks) == list(range(comb(n, 3)))
    for r in range(comb(n, 3)):
        assert rank(*unrank(r)) == r
        assert unrank(r).rank == r


def test_sorted_triples_follow_rank_order():
    tr = sorted_triples(7)
    assert [rank(*t) for t in tr.tolist()] == list(range(35))


def test_assert_triple_examples():
    s = TripleStore(3)
    assert s.assert_triple(0, 1, 2, Orientation.CCW) is AssertResult.ADDED
    assert s.assert_triple(1, 2, 0, Orientation.CCW) is AssertResult.ALREADY_KNOWN
    assert s.assert_triple(0, 2, 1, Orientation.CCW) is AssertResult.CONTRADICTION
    assert s.assert_triple(0, 2, 1, Orientation.CW) is AssertResult.ALREADY_KNOWN
    assert s.known_count == 1


@given(st.lists(st.tuples(st.permutations([0, 1, 2]), st.sampled_from([1, 2, 3, 4, 5]),
                          st.sampled_from([Orientation.CCW, Orientation.CW])), max_size=30))
def test_known_count_tracks_table(ops):
    s = TripleStore(6)
    for perm, shift, o in ops:
        a, b, c = ((v + shift) % 6 for v in perm)
        s.assert_triple(a, b, c, o)
        assert s.known_count == int(np.count_nonzero(s.table))
        assert 0 <= s.known_count <= comb(6, 3)


def test_is_complete():
    s = TripleStore(4)
    assert not is_complete(s)
    for t in combinations(range(4), 3):
        s.assert_triple(*t, Orientation.CCW)
    assert is_complete(s) and s.is_complete()


def test_cube_round_trip(rng):
    s = TripleStore(7, rng.choice(np.array([-1, 0, 1], dtype=np.int8), comb(7, 3)))
    cube = s.to_cube()
    for a, b, c in permutations(range(7), 3):
        key, sign = canonicalize(a, b, c)
        assert cube[a, b, c] == s.table[key.rank] * sign
    assert TripleStore.from_cube(cube) == s
