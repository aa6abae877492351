"""
Minimum OT-graph sizes for all order types of up to seven points
================================================================

Uses the generated order-type files in tests/data.  Each row is a histogram
of minimum sizes found by exhaustive search, once with both transitivity laws
and once without the dual law.  The structural axioms alone always need
floor(n/2) floor((n-1)/2) edges.
"""
import time
from collections import Counter
from pathlib import Path

from otgraphs import AXIOMS_123, AXIOMS_45, AXIOMS_45D, DatabaseSpec, e123, exhaustive_minimum, order_type_of
from otgraphs import read_database

data = Path(__file__).resolve().parent.parent / "tests" / "data"

for n in range(3, 8):
    ots = [order_type_of(s) for s in read_database(data / f"otypes{n:02d}.b08", DatabaseSpec(n))]
    t = time.perf_counter()
    row = {}
    for rules in (AXIOMS_45D, AXIOMS_45):
        row[rules.label()] = dict(sorted(Counter(exhaustive_minimum(ot, rules).size for ot in ots).items()))
    only123 = {exhaustive_minimum(ot, AXIOMS_123).size for ot in ots} if n <= 6 else {e123(n)}
    print(f"n={n} ({len(ots)} order types, {time.perf_counter() - t:.0f}s)")
    print("   4,5,5':", row["45d"])
    print("   4,5   :", row["45"])
    print("   1,2,3 :", only123, "formula", e123(n))
