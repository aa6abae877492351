"""Order-type database files, batch experiments and their reports.

Database files are flat arrays of fixed-size records: ``n`` points, each as
an unsigned ``x`` then ``y``, one byte per coordinate (two bytes,
little-endian, for the 9-point file).
"""
from __future__ import annotations

import json
import logging
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Optional, Sequence, Union

import numpy as np

from .errors import CollinearOrDegenerate, DegenerateRecord, FormatError, SizeMismatch
from .geometry import PointSet, order_type_of
from .graph import exit_graph, is_minimal
from .search import SearchConfig, multi_run

log = logging.getLogger(__name__)

EXPECTED_COUNTS = {3: 1, 4: 2, 5: 3, 6: 16, 7: 135, 8: 3315, 9: 158817}


@dataclass(frozen=True)
class DatabaseSpec:
    n: int
    bytes_per_coordinate: int = 0  # 0: 1 byte for n <= 8, 2 bytes for n = 9
    expected_count: Optional[int] = -1  # -1: the known total for n; None: unchecked

    def __post_init__(self):
        if not 3 <= self.n <= 9:
            raise ValueError("database files exist for n = 3..9")
        if self.bytes_per_coordinate == 0:
            object.__setattr__(self, "bytes_per_coordinate", 2 if self.n == 9 else 1)
        if self.bytes_per_coordinate not in (1, 2):
            raise ValueError("coordinates are 1 or 2 bytes")
        if self.expected_count == -1:
            object.__setattr__(self, "expected_count", EXPECTED_COUNTS[self.n])

    @property
    def record_size(self) -> int:
        return 2 * self.n * self.bytes_per_coordinate

    @property
    def dtype(self) -> np.dtype:
        return np.dtype(np.uint8) if self.bytes_per_coordinate == 1 else np.dtype("<u2")


def load_records(path: Union[str, Path], spec: DatabaseSpec) -> np.ndarray:
    """Raw coordinates as an array of shape (count, n, 2)."""
    size = os.path.getsize(path)
    if size % spec.record_size:
        raise SizeMismatch(f"{path}: {size} bytes is not a multiple of the record size {spec.record_size}")
    count = size // spec.record_size
    if spec.expected_count is not None and count != spec.expected_count:
        raise SizeMismatch(f"{path}: {count} records, expected {spec.expected_count}")
    return np.fromfile(path, dtype=spec.dtype).reshape(count, spec.n, 2)


def read_database(path: Union[str, Path], spec: DatabaseSpec) -> Iterator[PointSet]:
    for i, rec in enumerate(load_records(path, spec)):
        try:
            yield PointSet(rec.tolist())
        except CollinearOrDegenerate as exc:
            raise DegenerateRecord(i, str(exc)) from None


def write_database(path: Union[str, Path], sets: Iterable[Union[PointSet, np.ndarray]], spec: DatabaseSpec) -> None:
    rows = [np.asarray(s.coords if isinstance(s, PointSet) else s) for s in sets]
    arr = np.stack(rows) if rows else np.zeros((0, spec.n, 2))
    info = np.iinfo(spec.dtype)
    if arr.size and (arr.min() < info.min or arr.max() > info.max):
        raise ValueError(f"coordinates do not fit in {spec.bytes_per_coordinate} byte(s)")
    Path(path).write_bytes(arr.astype(spec.dtype).tobytes())


@dataclass
class BatchRow:
    index: int
    ot_graph_size: int
    exit_graph_size: int
    minimal: bool
    proven_minimum: bool
    edges: list[tuple[int, int]] = field(default_factory=list)


@dataclass
class BatchReport:
    n: int
    rows: list[BatchRow] = field(default_factory=list)
    failures: list[tuple[int, str]] = field(default_factory=list)

    def histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(r.ot_graph_size for r in self.rows).items()))

    def exit_histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(r.exit_graph_size for r in self.rows).items()))

    @property
    def total_ot_edges(self) -> int:
        return sum(r.ot_graph_size for r in self.rows)

    @property
    def total_exit_edges(self) -> int:
        return sum(r.exit_graph_size for r in self.rows)

    def to_text(self) -> str:
        out = [json.dumps({"n": self.n, "records": len(self.rows), "failures": len(self.failures)}) + "\n"]
        for r in self.rows:
            d = asdict(r)
            d["edges"] = [list(e) for e in r.edges]
            out.append(json.dumps(d, separators=(",", ":")) + "\n")
        for i, msg in self.failures:
            out.append(json.dumps({"failure": i, "error": msg}) + "\n")
        return "".join(out)

    @classmethod
    def from_text(cls, text: str) -> "BatchReport":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise FormatError("empty report")
        try:
            head = json.loads(lines[0])
            rep = cls(int(head["n"]))
            for ln in lines[1:]:
                d = json.loads(ln)
                if "failure" in d:
                    rep.failures.append((int(d["failure"]), str(d["error"])))
                else:
                    d["edges"] = [tuple(e) for e in d.get("edges", [])]
                    rep.rows.append(BatchRow(**d))
        except (ValueError, KeyError, TypeError) as exc:
            raise FormatError(f"malformed report: {exc}") from None
        return rep


def process_one(index: int, coords: np.ndarray, cfg: SearchConfig) -> BatchRow:
    ps = PointSet(coords.tolist())
    cube = order_type_of(ps).to_cube()
    ex = exit_graph(cube)
    res = multi_run(cube, cfg)
    assert is_minimal(res.graph, cube, cfg.rules)
    return BatchRow(index, res.size, ex.m, True, res.is_proven_minimum, list(res.graph.edges))


def _process_chunk(args):
    start, chunk, cfg = args
    rows, fails = [], []
    for off, coords in enumerate(chunk):
        try:
            rows.append(process_one(start + off, coords, cfg))
        except Exception as exc:  # a bad record must not stop the batch
            fails.append((start + off, f"{type(exc).__name__}: {exc}"))
    return rows, fails


def run_batch(db: Union[np.ndarray, Sequence[PointSet]], cfg: SearchConfig, jobs: int = 1,
              chunk_size: int = 16) -> BatchReport:
    """Exit graph plus best OT-graph for every order type in ``db``.

    Records are processed in chunks (in parallel when ``jobs > 1``) and merged
    in record order, so the report does not depend on scheduling.
    """
    if isinstance(db, np.ndarray):
        records = db
    else:
        records = np.stack([s.coords for s in db]) if len(db) else np.zeros((0, 3, 2), np.int64)
    n = records.shape[1] if len(records) else 0
    report = BatchReport(n)
    tasks = [(i, records[i:i + chunk_size], cfg) for i in range(0, len(records), chunk_size)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_process_chunk, tasks))
    else:
        results = [_process_chunk(t) for t in tasks]
    for rows, fails in results:
        report.rows.extend(rows)
        report.failures.extend(fails)
        for i, msg in fails:
            log.warning("record %d failed: %s", i, msg)
    return report


def stats(report: BatchReport) -> str:
    """Size histogram (one ``size : count`` line per size) and exit-graph comparison."""
    out = []
    hist = report.histogram()
    out.append(f"n = {report.n}, order types = {len(report.rows)}")
    out.append("OT-graph sizes")
    out += [f"{k} : {v}" for k, v in hist.items()]
    out.append("exit graph sizes")
    out += [f"{k} : {v}" for k, v in report.exit_histogram().items()]
    smaller = sum(r.ot_graph_size < r.exit_graph_size for r in report.rows)
    equal = sum(r.ot_graph_size == r.exit_graph_size for r in report.rows)
    larger = sum(r.ot_graph_size > r.exit_graph_size for r in report.rows)
    out.append(f"OT-graph smaller / equal / larger than exit graph: {smaller} / {equal} / {larger}")
    out.append(f"total edges: OT-graphs {report.total_ot_edges}, exit graphs {report.total_exit_edges}")
    if report.total_exit_edges:
        out.append(f"ratio: {100.0 * report.total_ot_edges / report.total_exit_edges:.2f}%")
    if report.rows:
        out.append(f"proven minimum: {sum(r.proven_minimum for r in report.rows)}")
    if report.failures:
        out.append(f"failures: {len(report.failures)}")
    return "\n".join(out) + "\n"
