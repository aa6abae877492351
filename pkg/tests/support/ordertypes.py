"""Order-type enumeration for small n, used to build the test database files.

The published database is not bundled; this module regenerates complete
sets of order types for small n by random sampling and point relocation on
an 8-bit grid, deduplicated by a canonical form.  Completeness is checked by
comparing the number of distinct canonical forms against the known totals
(1, 2, 3, 16, 135, 3315 for n = 3..8).

The canonical form only looks at orientations: for every extreme point v
(and for the mirror image) the other points are labelled by their angular
order around v, and the lexicographically smallest sign vector wins.
"""
from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

import numpy as np

KNOWN_TOTALS = {3: 1, 4: 2, 5: 3, 6: 16, 7: 135, 8: 3315, 9: 158817}


def sign_cube(coords: np.ndarray) -> np.ndarray:
    x = coords[:, 0].astype(np.int64)
    y = coords[:, 1].astype(np.int64)
    dx = x[None, :] - x[:, None]
    dy = y[None, :] - y[:, None]
    return np.sign(dx[:, :, None] * dy[:, None, :] - dy[:, :, None] * dx[:, None, :]).astype(np.int8)


def _triples(n):
    i, j, k = np.array([(i, j, k) for k in range(n) for j in range(k) for i in range(j)]).T.reshape(3, -1)
    return i, j, k


_TRIPLES = {n: _triples(n) for n in range(3, 11)}


def in_general_position(cube: np.ndarray) -> bool:
    i, j, k = _TRIPLES[cube.shape[0]]
    return bool(np.all(cube[i, j, k] != 0))


def canonical_key(cube: np.ndarray) -> bytes:
    n = cube.shape[0]
    i, j, k = _TRIPLES[n]
    best = None
    for m in (1, -1):
        c = cube * m
        counts = (c == 1).sum(axis=2)  # counts[v, a] = #{b : v a b CCW}
        for v in range(n):
            row = counts[v].copy()
            row[v] = n  # v first
            if np.max(np.delete(row, v)) != n - 2:
                continue  # v is not extreme
            perm = np.argsort(-row, kind="stable")
            key = c[np.ix_(perm, perm, perm)][i, j, k].tobytes()
            if best is None or key < best:
                best = key
    return best


def generate(n: int, time_limit: float, rng: np.random.Generator, grid: int = 256,
             verbose: bool = False) -> dict[bytes, np.ndarray]:
    target = KNOWN_TOTALS[n]
    found: dict[bytes, np.ndarray] = {}
    start = time.time()

    def offer(coords):
        cube = sign_cube(coords)
        if not in_general_position(cube):
            return
        key = canonical_key(cube)
        if key not in found:
            found[key] = coords.copy()

    while len(found) < target and time.time() - start < time_limit:
        roll = rng.random()
        if roll < 0.3 or not found:
            coords = rng.integers(0, grid, size=(n, 2))
        else:
            keys = list(found)
            base = found[keys[rng.integers(len(keys))]].copy()
            i = rng.integers(n)
            if roll < 0.7:
                base[i] = rng.integers(0, grid, size=2)
            else:
                # small move: crosses few lines, reaches neighbouring order types
                base[i] = np.clip(base[i] + rng.integers(-12, 13, size=2), 0, grid - 1)
            coords = base
        if len(np.unique(coords, axis=0)) < n:
            continue
        offer(coords)
        if verbose and len(found) % 100 == 0:
            print(f"n={n}: {len(found)}/{target} after {time.time() - start:.0f}s", file=sys.stderr)
    return found


def extend(smaller: np.ndarray, found: dict[bytes, np.ndarray], target: int, scale: int = 64,
           directions: int = 24, verbose: bool = False) -> None:
    """Add one point to every cell of the line arrangement of each smaller set.

    Every cell of an arrangement has a vertex (an intersection of two lines or
    one of the points), so probing a small circle around each vertex reaches
    all of them.  Coordinates are scaled by ``scale`` first so the probes land
    on integers; results may need two bytes per coordinate.
    """
    ang = 2 * np.pi * (np.arange(directions) + 0.5) / directions
    ring = np.stack([np.cos(ang), np.sin(ang)], axis=1)
    for rec in smaller:
        if len(found) >= target:
            return
        pts = rec.astype(np.float64) * scale
        m = len(pts)
        lines = [(pts[a], pts[b]) for a in range(m) for b in range(a + 1, m)]
        verts = list(pts)
        for u in range(len(lines)):
            p1, p2 = lines[u]
            d1 = p2 - p1
            for v in range(u + 1, len(lines)):
                p3, p4 = lines[v]
                d2 = p4 - p3
                den = d1[0] * d2[1] - d1[1] * d2[0]
                if den == 0:
                    continue
                t = ((p3[0] - p1[0]) * d2[1] - (p3[1] - p1[1]) * d2[0]) / den
                x = p1 + t * d1
                if np.all(np.abs(x) < 30000):
                    verts.append(x)
        base = rec.astype(np.int64) * scale
        for x in verts:
            for rad in (1.5, 4.0):
                for probe in np.rint(x + rad * ring).astype(np.int64):
                    coords = np.vstack([base, probe[None, :]])
                    cube = sign_cube(coords)
                    if not in_general_position(cube):
                        continue
                    key = canonical_key(cube)
                    if key not in found:
                        found[key] = coords - coords.min(axis=0)
        if verbose:
            print(f"extend: {len(found)}/{target}", file=sys.stderr)


def write_database(path: Path, sets: dict[bytes, np.ndarray]) -> None:
    records = [sets[k] for k in sorted(sets)]
    arr = np.stack(records)
    if arr.max() < 256:
        path.write_bytes(arr.astype(np.uint8).tobytes())
    else:
        path.with_suffix(".b16").write_bytes(arr.astype("<u2").tobytes())


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("n", type=int, nargs="+")
    ap.add_argument("--out", type=Path, default=Path(__file__).resolve().parents[1] / "data")
    ap.add_argument("--seed", type=int, default=20201)
    ap.add_argument("--time-limit", type=float, default=3600.0)
    args = ap.parse_args(argv)
    rng = np.random.default_rng(args.seed)
    for n in args.n:
        sets = generate(n, args.time_limit, rng, verbose=True)
        smaller = args.out / f"otypes{n - 1:02d}.b08"
        if len(sets) < KNOWN_TOTALS[n] and smaller.exists():
            recs = np.fromfile(smaller, dtype=np.uint8).reshape(-1, n - 1, 2)
            extend(recs, sets, KNOWN_TOTALS[n], verbose=True)
        status = "complete" if len(sets) == KNOWN_TOTALS[n] else "INCOMPLETE"
        print(f"n={n}: {len(sets)} order types ({status})")
        if len(sets) == KNOWN_TOTALS[n]:
            write_database(args.out / f"otypes{n:02d}.b08", sets)


if __name__ == "__main__":
    main()
