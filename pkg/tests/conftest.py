import sys
from pathlib import Path

import numpy as np
import pytest

HERE = Path(__file__).resolve().parent
DATA = HERE / "data"
sys.path.insert(0, str(HERE / "support"))

from otgraphs import PointSet, order_type_of  # noqa: E402
from otgraphs.database import DatabaseSpec, load_records  # noqa: E402


def pytest_addoption(parser):
    parser.addoption("--extended", action="store_true", default=False,
                     help="run the long experiments marked 'extended'")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--extended"):
        return
    skip = pytest.mark.skip(reason="extended experiment; pass --extended to run")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


def db_path(n):
    """Database file for n points, or None when it is not available."""
    for name in (f"otypes{n:02d}.b08", f"otypes{n:02d}.b16"):
        p = DATA / name
        if p.exists():
            return p
    return None


def db_records(n):
    p = db_path(n)
    if p is None:
        pytest.skip(f"no order-type database for n={n} in {DATA}")
    return load_records(p, DatabaseSpec(n, 2 if p.suffix == ".b16" else 1))


def db_order_types(n):
    return [order_type_of(PointSet(r.tolist())) for r in db_records(n)]


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def random_point_set(rng, n, lo=-1000, hi=1000):
    while True:
        pts = rng.integers(lo, hi, size=(n, 2)).tolist()
        try:
            return PointSet(pts)
        except ValueError:
            continue


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
        done = {ln.split(":")[0][len("criterion "):] for ln in lines}
        for label in getattr(mod, "EXTENDED", []):
            if label not in done:
                terminalreporter.write_line(f"criterion {label}: NOT RUN  (extended; needs --extended and the "
                                            "order-type database file in tests/data)")
