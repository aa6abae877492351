"""Exact integer points, the orientation predicate and order types."""
from __future__ import annotations

from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import CollinearOrDegenerate, CoordinateRange, FormatError
from .triples import Orientation, TripleStore, sorted_triples

INT32_MIN = -(2**31)
INT32_MAX = 2**31 - 1


class Point(NamedTuple):
    x: int
    y: int


def orient(p: Point, q: Point, r: Point) -> Orientation:
    """Orientation of the ordered triple, computed with exact integer arithmetic."""
    det = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    if det > 0:
        return Orientation.CCW
    if det < 0:
        return Orientation.CW
    raise CollinearOrDegenerate(f"degenerate triple {tuple(p)}, {tuple(q)}, {tuple(r)}")


def _as_int(v) -> int:
    if isinstance(v, (bool, np.bool_)):
        raise TypeError("boolean coordinate")
    iv = int(v)
    if iv != v:
        raise TypeError(f"non-integer coordinate {v!r}")
    if not INT32_MIN <= iv <= INT32_MAX:
        raise CoordinateRange(f"coordinate {iv} outside signed 32-bit range")
    return iv


class PointSet:
    """An indexed set of points in general position.

    Validation (distinctness, no collinear triple) runs on construction and
    costs O(n^3).
    """

    def __init__(self, points: Iterable[Sequence[int]], validate: bool = True):
        self.points = tuple(Point(_as_int(p[0]), _as_int(p[1])) for p in points)
        self.coords = np.array(self.points, dtype=np.int64).reshape(-1, 2)
        if validate:
            self._validate()

    def _validate(self) -> None:
        if len(set(self.points)) != len(self.points):
            raise CollinearOrDegenerate("duplicate points")
        if len(self.points) >= 3:
            det = orientation_determinants(self.coords)
            tr = sorted_triples(len(self.points))
            bad = np.flatnonzero(det[tr[:, 0], tr[:, 1], tr[:, 2]] == 0)
            if len(bad):
                i, j, k = tr[bad[0]]
                raise CollinearOrDegenerate(f"points {i}, {j}, {k} are collinear")

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]

    def __iter__(self):
        return iter(self.points)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PointSet) and self.points == other.points

    def __repr__(self) -> str:
        return f"PointSet({[tuple(p) for p in self.points]})"

    def orient(self, a: int, b: int, c: int) -> Orientation:
        return orient(self.points[a], self.points[b], self.points[c])

    def cube(self) -> np.ndarray:
        """Signs of all ordered-triple determinants as an (n, n, n) int8 array."""
        return np.sign(orientation_determinants(self.coords)).astype(np.int8)


def orientation_determinants(coords: np.ndarray) -> np.ndarray:
    """Determinant for every ordered triple; exact for 32-bit inputs.

    int64 is used when every coordinate difference fits in 31 bits, otherwise
    Python integers (object dtype) keep the arithmetic exact.
    """
    coords = np.asarray(coords)
    span = int(coords.max() - coords.min()) if coords.size else 0
    if span >= 2**31:
        coords = coords.astype(object)
    x = coords[:, 0]
    y = coords[:, 1]
    dx = x[None, :] - x[:, None]  # dx[p, q] = q.x - p.x
    dy = y[None, :] - y[:, None]
    return dx[:, :, None] * dy[:, None, :] - dy[:, :, None] * dx[:, None, :]


def order_type_of(s: PointSet) -> TripleStore:
    """The complete order type of ``s`` as a canonical triple store."""
    n = len(s)
    if n < 3:
        return TripleStore(n)
    det = orientation_determinants(s.coords)
    tr = sorted_triples(n)
    signs = np.sign(det[tr[:, 0], tr[:, 1], tr[:, 2]]).astype(np.int8)
    if np.any(signs == 0):
        i, j, k = tr[np.flatnonzero(signs == 0)[0]]
        raise CollinearOrDegenerate(f"points {i}, {j}, {k} are collinear")
    return TripleStore(n, signs)


def convex_hull(s: PointSet) -> list[int]:
    """Indices of hull vertices in counterclockwise order (monotone chain, exact)."""
    idx = sorted(range(len(s)), key=lambda i: s.points[i])

    def cross(o, a, b):
        p, q, r = s.points[o], s.points[a], s.points[b]
        return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)

    lower: list[int] = []
    for i in idx:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], i) <= 0:
            lower.pop()
        lower.append(i)
    upper: list[int] = []
    for i in reversed(idx):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], i) <= 0:
            upper.pop()
        upper.append(i)
    return lower[:-1] + upper[:-1]


def parse_points(text: str) -> PointSet:
    """Parse ``n`` followed by ``n`` lines of ``x y``."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise FormatError("empty point file")
    try:
        n = int(lines[0][0])
        if len(lines[0]) != 1 or n < 0:
            raise ValueError
        rows = [(int(a), int(b)) for a, b in (ln for ln in lines[1:])]
    except ValueError as exc:
        raise FormatError(f"malformed point file: {exc}") from None
    if len(rows) != n:
        raise FormatError(f"expected {n} points, found {len(rows)}")
    return PointSet(rows)


def format_points(s: PointSet) -> str:
    return "".join([f"{len(s)}\n"] + [f"{p.x} {p.y}\n" for p in s])


def is_general_position(points: Sequence[Sequence[int]]) -> bool:
    for p, q, r in combinations(points, 3):
        if (q[0] - p[0]) * (r[1] - p[1]) == (q[1] - p[1]) * (r[0] - p[0]):
            return False
    return len(set(map(tuple, points))) == len(points)
