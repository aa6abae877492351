"""Canonical triple indexing and the tri-state orientation store.

Every unordered triple ``{i, j, k}`` with ``i < j < k`` is stored once, at its
colex rank ``C(i,1) + C(j,2) + C(k,3)``.  The orientation of an ordered triple
is the stored value of its sorted form multiplied by the permutation parity,
so cyclic symmetry, antisymmetry and nondegeneracy hold by construction.
"""
from __future__ import annotations

import enum
import functools
from math import comb
from typing import Iterator, NamedTuple, Optional

import numpy as np

from .errors import DuplicateIndex


class Orientation(enum.IntEnum):
    CCW = 1
    CW = -1

    def flip(self) -> "Orientation":
        return Orientation(-self.value)


UNKNOWN = 0


class TripleKey(NamedTuple):
    i: int
    j: int
    k: int

    @property
    def rank(self) -> int:
        return rank(self.i, self.j, self.k)


class AssertResult(enum.Enum):
    ADDED = "added"
    ALREADY_KNOWN = "already_known"
    CONTRADICTION = "contradiction"


def rank(i: int, j: int, k: int) -> int:
    """Colex rank of the sorted triple ``i < j < k``."""
    return i + j * (j - 1) // 2 + k * (k - 1) * (k - 2) // 6


def unrank(r: int) -> TripleKey:
    if r < 0:
        raise ValueError("rank must be non-negative")
    k = 2
    while comb(k + 1, 3) <= r:
        k += 1
    r -= comb(k, 3)
    j = 1
    while comb(j + 1, 2) <= r:
        j += 1
    r -= comb(j, 2)
    return TripleKey(r, j, k)


def canonicalize(a: int, b: int, c: int) -> tuple[TripleKey, int]:
    """Sort ``(a, b, c)`` and return the parity of the permutation.

    >>> canonicalize(2, 0, 1)
    (TripleKey(i=0, j=1, k=2), 1)
    """
    if a == b or b == c or a == c:
        raise DuplicateIndex(f"indices must be distinct: {(a, b, c)}")
    sign = 1
    if a > b:
        a, b = b, a
        sign = -sign
    if b > c:
        b, c = c, b
        sign = -sign
    if a > b:
        a, b = b, a
        sign = -sign
    return TripleKey(a, b, c), sign


@functools.lru_cache(maxsize=64)
def index_cube(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Rank and parity for every ordered triple of ``n`` points.

    Entries with repeated indices have rank -1 and parity 0.
    """
    ranks = np.full((n, n, n), -1, dtype=np.int64)
    parity = np.zeros((n, n, n), dtype=np.int8)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if a != b and b != c and a != c:
                    key, s = canonicalize(a, b, c)
                    ranks[a, b, c] = key.rank
                    parity[a, b, c] = s
    ranks.flags.writeable = False
    parity.flags.writeable = False
    return ranks, parity


@functools.lru_cache(maxsize=64)
def sorted_triples(n: int) -> np.ndarray:
    """All sorted triples of ``range(n)`` as an array of shape (C(n,3), 3), in rank order."""
    out = np.array([tuple(unrank(r)) for r in range(comb(n, 3))], dtype=np.int64).reshape(-1, 3)
    out.flags.writeable = False
    return out


class TripleStore:
    """Orientation table over the canonical triples of ``n`` points.

    ``table[r]`` is +1 (CCW), -1 (CW) or 0 (unknown) for the sorted triple of rank ``r``.
    """

    def __init__(self, n: int, table: Optional[np.ndarray] = None):
        if n < 0:
            raise ValueError("n must be non-negative")
        self.n = n
        size = comb(n, 3)
        if table is None:
            self.table = np.zeros(size, dtype=np.int8)
        else:
            table = np.asarray(table, dtype=np.int8)
            if table.shape != (size,):
                raise ValueError(f"table must have length {size}")
            if np.any((table != 0) & (table != 1) & (table != -1)):
                raise ValueError("table entries must be in {-1, 0, 1}")
            self.table = table.copy()
        self.known_count = int(np.count_nonzero(self.table))

    @property
    def size(self) -> int:
        return len(self.table)

    def copy(self) -> "TripleStore":
        return TripleStore(self.n, self.table)

    def get(self, a: int, b: int, c: int) -> Optional[Orientation]:
        key, sign = canonicalize(a, b, c)
        self._check_range(key)
        v = int(self.table[key.rank])
        return None if v == 0 else Orientation(v * sign)

    def assert_triple(self, a: int, b: int, c: int, o: Orientation) -> AssertResult:
        key, sign = canonicalize(a, b, c)
        self._check_range(key)
        want = int(o) * sign
        r = key.rank
        have = int(self.table[r])
        if have == 0:
            self.table[r] = want
            self.known_count += 1
            return AssertResult.ADDED
        return AssertResult.ALREADY_KNOWN if have == want else AssertResult.CONTRADICTION

    def is_complete(self) -> bool:
        return self.known_count == self.size

    def known(self) -> Iterator[tuple[TripleKey, Orientation]]:
        for r in np.flatnonzero(self.table):
            yield unrank(int(r)), Orientation(int(self.table[r]))

    def to_cube(self) -> np.ndarray:
        """Expand to an (n, n, n) int8 array over ordered triples."""
        ranks, parity = index_cube(self.n)
        if self.n < 3:
            return np.zeros((self.n,) * 3, dtype=np.int8)
        cube = self.table[np.where(ranks < 0, 0, ranks)] * parity
        return cube.astype(np.int8)

    @classmethod
    def from_cube(cls, cube: np.ndarray) -> "TripleStore":
        n = cube.shape[0]
        tr = sorted_triples(n)
        if len(tr) == 0:
            return cls(n)
        return cls(n, cube[tr[:, 0], tr[:, 1], tr[:, 2]])

    def _check_range(self, key: TripleKey) -> None:
        if key.i < 0 or key.k >= self.n:
            raise IndexError(f"triple {tuple(key)} out of range for n={self.n}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TripleStore):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.table, other.table)

    def __repr__(self) -> str:
        return f"TripleStore(n={self.n}, known={self.known_count}/{self.size})"


def is_complete(store: TripleStore) -> bool:
    return store.is_complete()
