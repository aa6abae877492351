"""CC-closure of partial orientation sets by forward chaining.

Cyclic symmetry, antisymmetry and nondegeneracy are structural (see
:mod:`otgraphs.triples`); the worklist applies interiority, transitivity and
optionally dual transitivity, each instance firing only when the popped
triple fills one of its antecedent slots.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import comb
from typing import Optional

import numpy as np

from . import _kernel as K
from .errors import BrokenTrace
from .triples import AssertResult, Orientation, TripleStore, canonicalize

# the closure kernels compile lazily; the first call in a process takes a few seconds


@dataclass(frozen=True)
class RuleSet:
    use_axiom4: bool = True
    use_axiom5: bool = True
    use_axiom5_dual: bool = True

    @classmethod
    def parse(cls, text: str) -> "RuleSet":
        """``45d`` (default), ``45``, ``none``; any combination of 4, 5 and d."""
        text = text.strip().lower()
        if text in ("none", "123", ""):
            return cls(False, False, False)
        if set(text) - set("45d"):
            raise ValueError(f"unknown rule set {text!r}")
        return cls("4" in text, "5" in text, "d" in text)

    def label(self) -> str:
        s = ("4" if self.use_axiom4 else "") + ("5" if self.use_axiom5 else "")
        s += "d" if self.use_axiom5_dual else ""
        return s or "none"

    @property
    def flags(self) -> tuple[bool, bool, bool]:
        return self.use_axiom4, self.use_axiom5, self.use_axiom5_dual


AXIOMS_123 = RuleSet(False, False, False)
AXIOMS_45 = RuleSet(True, True, False)
AXIOMS_45D = RuleSet(True, True, True)


class Status(enum.Enum):
    COMPLETE = "complete"
    INCOMPLETE = "incomplete"
    INCONSISTENT = "inconsistent"


class Axiom(enum.Enum):
    SEED = K.SEED
    AX4 = K.AX4
    AX5 = K.AX5
    AX5D = K.AX5D


@dataclass(frozen=True)
class Derivation:
    """One rule application; ``conclusion`` is the ordered triple proved CCW.

    ``points`` is ``(p, q, r, t)`` for interiority and ``(p, q, r, s, t)``
    for transitivity and its dual.
    """

    axiom: Axiom
    points: tuple[int, ...]
    conclusion: tuple[int, int, int]

    def antecedents(self) -> list[tuple[int, int, int]]:
        if self.axiom is Axiom.AX4:
            p, q, r, t = self.points
            return [(t, q, r), (p, t, r), (p, q, t)]
        if self.axiom is Axiom.AX5:
            p, q, r, s, t = self.points
            return [(t, s, p), (t, s, q), (t, s, r), (t, p, q), (t, q, r)]
        if self.axiom is Axiom.AX5D:
            p, q, r, s, t = self.points
            return [(s, t, p), (s, t, q), (s, t, r), (t, p, q), (t, q, r)]
        return []

    def expected_conclusion(self) -> tuple[int, int, int]:
        if self.axiom is Axiom.AX4:
            p, q, r, _ = self.points
            return (p, q, r)
        p, q, r, _, t = self.points
        return (t, p, r)

    def format(self) -> str:
        a, b, c = self.conclusion
        args = ",".join(str(v) for v in self.points)
        return f"{a} {b} {c} CCW <- {self.axiom.name}[{args}]"


@dataclass
class ProofTrace:
    steps: list[Derivation] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.steps)

    @classmethod
    def from_array(cls, rows: np.ndarray) -> "ProofTrace":
        steps = []
        for row in rows.tolist():
            ax = Axiom(row[0])
            width = 4 if ax is Axiom.AX4 else 5
            steps.append(Derivation(ax, tuple(row[1:1 + width]), tuple(row[6:9])))
        return cls(steps)


@dataclass
class CloseStats:
    pops: int
    checks: int
    max_checks_per_pop: int


class Engine:
    """Mutable closure state for one order-type instance.

    Wraps the kernel arrays so that seeding and saturation can be interleaved
    (the incremental search algorithms seed one edge at a time).
    """

    def __init__(self, n: int, rules: RuleSet = AXIOMS_45D, *, trace: bool = False,
                 pair_counter: bool = False, mode: int = K.LIFO, rng_seed: Optional[int] = None):
        self.n = n
        self.rules = rules
        self.total = comb(n, 3)
        if n > K.MAX_N:
            raise ValueError(f"the closure engine handles at most {K.MAX_N} points")
        self.cc = np.zeros((n, n, n), dtype=np.int8)
        self.mk = np.zeros((n, n), dtype=np.int64)
        self.queue = np.empty((max(self.total, 1), 3), dtype=np.int32)
        self.st = np.zeros(K.STATE_SIZE, dtype=np.int64)
        if pair_counter:
            self.pc = np.full((n, n), n - 2, dtype=np.int32)
            np.fill_diagonal(self.pc, 0)
        else:
            self.pc = np.zeros((0, 0), dtype=np.int32)
        self.trace = np.zeros((self.total if trace else 0, K.TRACE_WIDTH), dtype=np.int32)
        self.mode = mode
        if mode == K.RANDOM:
            K.seed_rng(0 if rng_seed is None else int(rng_seed) % 2**32)

    @property
    def known(self) -> int:
        return int(self.st[K.KNOWN])

    @property
    def inconsistent(self) -> bool:
        return self.st[K.STATUS] == K.INCONSISTENT

    def is_complete(self) -> bool:
        return self.known == self.total

    def add(self, a: int, b: int, c: int, o: Orientation) -> AssertResult:
        x, y, z = (a, b, c) if o == Orientation.CCW else (a, c, b)
        res = K._add(self.cc, self.mk, x, y, z, self.queue, self.st, self.pc, self.trace,
                     K.SEED, -1, -1, -1, -1, -1)
        if res == 2:
            self.st[K.STATUS] = K.INCONSISTENT
            return AssertResult.CONTRADICTION
        return AssertResult.ADDED if res == 0 else AssertResult.ALREADY_KNOWN

    def load(self, store: TripleStore) -> None:
        for key, o in store.known():
            self.add(key.i, key.j, key.k, o)

    def seed_edge(self, ot_cube: np.ndarray, a: int, b: int) -> int:
        return int(K.seed_edge(self.cc, self.mk, ot_cube, a, b, self.queue, self.st, self.pc, self.trace))

    def run(self, stop_when_complete: bool = False) -> None:
        if self.inconsistent:
            return
        K.saturate(self.cc, self.mk, self.queue, self.st, self.pc, self.trace, *self.rules.flags,
                   self.mode, stop_when_complete)

    def status(self) -> Status:
        if self.inconsistent:
            return Status.INCONSISTENT
        return Status.COMPLETE if self.is_complete() else Status.INCOMPLETE

    def store(self) -> TripleStore:
        return TripleStore.from_cube(self.cc)

    def proof(self) -> ProofTrace:
        return ProofTrace.from_array(self.trace[: self.st[K.NTRACE]])

    def stats(self) -> CloseStats:
        return CloseStats(int(self.st[K.POPS]), int(self.st[K.CHECKS]), int(self.st[K.MAXCHK]))


def close(store: TripleStore, rules: RuleSet = AXIOMS_45D, trace: bool = False,
          mode: int = K.LIFO, rng_seed: Optional[int] = None
          ) -> tuple[TripleStore, Optional[ProofTrace], Status]:
    """Forward-chaining closure of ``store`` under ``rules``.

    ``mode`` selects the worklist discipline (LIFO, FIFO or RANDOM); the
    result does not depend on it.  Returns the closed store, the proof trace
    (``None`` unless ``trace``) and the status.
    """
    eng = Engine(store.n, rules, trace=trace, mode=mode, rng_seed=rng_seed)
    eng.load(store)
    eng.run()
    proof = eng.proof() if trace else None
    return eng.store(), proof, eng.status()


def close_with_stats(store: TripleStore, rules: RuleSet = AXIOMS_45D) -> tuple[TripleStore, Status, CloseStats]:
    eng = Engine(store.n, rules)
    eng.load(store)
    eng.run()
    return eng.store(), eng.status(), eng.stats()


def replay(trace: ProofTrace, seed: TripleStore) -> TripleStore:
    """Re-derive every step from ``seed``; raises BrokenTrace on a gap."""
    cur = seed.copy()
    for i, step in enumerate(trace.steps):
        if step.axiom is Axiom.SEED:
            continue
        if step.conclusion != step.expected_conclusion():
            raise BrokenTrace(f"step {i}: conclusion {step.conclusion} does not match {step.axiom.name}{step.points}")
        if len(set(step.points)) != len(step.points):
            raise BrokenTrace(f"step {i}: repeated point in {step.points}")
        for a, b, c in step.antecedents():
            if cur.get(a, b, c) is not Orientation.CCW:
                raise BrokenTrace(f"step {i}: antecedent {a} {b} {c} not known CCW")
        if cur.assert_triple(*step.conclusion, Orientation.CCW) is AssertResult.CONTRADICTION:
            raise BrokenTrace(f"step {i}: conclusion contradicts a known triple")
    return cur


def emit_proof(trace: ProofTrace, store: TripleStore) -> str:
    """Proof listing, one derivation per line; ``store`` is the seed the trace starts from."""
    replay(trace, store)
    return "".join(step.format() + "\n" for step in trace.steps if step.axiom is not Axiom.SEED)


def parse_proof(text: str) -> ProofTrace:
    import re

    pat = re.compile(r"^(\d+) (\d+) (\d+) CCW <- (AX4|AX5|AX5D)\[([\d,]+)\]$")
    steps = []
    for ln in text.splitlines():
        if not ln.strip():
            continue
        m = pat.match(ln)
        if not m:
            raise ValueError(f"bad proof line: {ln!r}")
        pts = tuple(int(v) for v in m.group(5).split(","))
        steps.append(Derivation(Axiom[m.group(4)], pts, (int(m.group(1)), int(m.group(2)), int(m.group(3)))))
    return ProofTrace(steps)


def assert_triple(store: TripleStore, a: int, b: int, c: int, o: Orientation) -> AssertResult:
    return store.assert_triple(a, b, c, o)


def triples_from_text(text: str, n: Optional[int] = None) -> tuple[TripleStore, list[tuple[int, int, int, Orientation]]]:
    """Parse lines ``a b c +|-``.  A first line holding one integer sets ``n``.

    Returns the store and the list of contradicting lines (empty if consistent).
    """
    from .errors import FormatError

    rows = []
    header_n = None
    for ln in text.splitlines():
        parts = ln.split()
        if not parts or parts[0].startswith("#"):
            continue
        if len(parts) == 1 and header_n is None and not rows:
            header_n = int(parts[0])
            continue
        if len(parts) != 4 or parts[3] not in ("+", "-"):
            raise FormatError(f"bad triple line: {ln!r}")
        try:
            a, b, c = (int(v) for v in parts[:3])
        except ValueError:
            raise FormatError(f"bad triple line: {ln!r}") from None
        rows.append((a, b, c, Orientation.CCW if parts[3] == "+" else Orientation.CW))
    if n is None:
        n = header_n if header_n is not None else (max((max(r[:3]) for r in rows), default=-1) + 1)
    store = TripleStore(n)
    bad = []
    for a, b, c, o in rows:
        canonicalize(a, b, c)
        if store.assert_triple(a, b, c, o) is AssertResult.CONTRADICTION:
            bad.append((a, b, c, o))
    return store, bad
