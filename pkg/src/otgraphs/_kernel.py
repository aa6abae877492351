"""Compiled worklist saturation over an ordered-triple cube.

State is kept in plain arrays so that search loops can seed edges and
re-saturate incrementally without leaving compiled code:

* ``cc[x, y, z]`` is +1 if ``xyz`` is known CCW, -1 if known CW, 0 if unknown;
  all six permutations of a triple are written together.
* ``mk[x, y]`` has bit ``z`` set iff ``xyz`` is known CCW.  The axiom loops
  intersect these masks instead of probing ``cc`` point by point, which
  limits the engine to ``MAX_N`` points.
* ``queue`` holds CCW-ordered triples waiting to be processed; every triple
  enters it at most once, so ``C(n, 3)`` rows suffice.
* ``st`` holds the counters indexed by the constants below.
* ``pc`` is the pair counter (unknown triples per pair) or an empty array.
* ``trace`` receives one row per derivation or is empty when tracing is off.
"""
import numpy as np
from numba import njit

HEAD, TAIL, KNOWN, POPS, CHECKS, MAXCHK, NTRACE, STATUS = range(8)
STATE_SIZE = 8

OK = 0
INCONSISTENT = 1

LIFO, FIFO, RANDOM = 0, 1, 2

SEED, AX4, AX5, AX5D = 0, 4, 5, 6
TRACE_WIDTH = 9  # axiom, five argument slots (-1 padded), conclusion x y z

MAX_N = 62
ONE = np.int64(1)


@njit(cache=True)
def seed_rng(seed):
    np.random.seed(seed)


@njit(cache=True)
def _add(cc, mk, x, y, z, queue, st, pc, trace, axiom, a0, a1, a2, a3, a4):
    """Record ``xyz`` as CCW.  Returns 0 if added, 1 if known, 2 on contradiction."""
    v = cc[x, y, z]
    if v == 1:
        return 1
    if v == -1:
        return 2
    cc[x, y, z] = 1
    cc[y, z, x] = 1
    cc[z, x, y] = 1
    cc[x, z, y] = -1
    cc[z, y, x] = -1
    cc[y, x, z] = -1
    mk[x, y] |= ONE << z
    mk[y, z] |= ONE << x
    mk[z, x] |= ONE << y
    t = st[TAIL]
    queue[t, 0] = x
    queue[t, 1] = y
    queue[t, 2] = z
    st[TAIL] = t + 1
    st[KNOWN] += 1
    if pc.shape[0] > 0:
        pc[x, y] -= 1
        pc[y, x] -= 1
        pc[x, z] -= 1
        pc[z, x] -= 1
        pc[y, z] -= 1
        pc[z, y] -= 1
    if trace.shape[0] > 0 and axiom != SEED:
        k = st[NTRACE]
        trace[k, 0] = axiom
        trace[k, 1] = a0
        trace[k, 2] = a1
        trace[k, 3] = a2
        trace[k, 4] = a3
        trace[k, 5] = a4
        trace[k, 6] = x
        trace[k, 7] = y
        trace[k, 8] = z
        st[NTRACE] = k + 1
    return 0


@njit(cache=True)
def seed_triple(cc, mk, ot, a, b, c, queue, st, pc, trace):
    """Copy the orientation of ``abc`` from the reference cube ``ot``."""
    if ot[a, b, c] == 1:
        return _add(cc, mk, a, b, c, queue, st, pc, trace, SEED, -1, -1, -1, -1, -1)
    return _add(cc, mk, a, c, b, queue, st, pc, trace, SEED, -1, -1, -1, -1, -1)


@njit(cache=True)
def seed_edge(cc, mk, ot, a, b, queue, st, pc, trace):
    """Seed every unknown triple containing the pair ``ab``; returns how many."""
    n = cc.shape[0]
    added = 0
    for c in range(n):
        if c != a and c != b and cc[a, b, c] == 0:
            seed_triple(cc, mk, ot, a, b, c, queue, st, pc, trace)
            added += 1
    return added


@njit(cache=True)
def _lowest(m, n):
    for i in range(n):
        if (m >> i) & 1:
            return i
    return -1


@njit(cache=True)
def _conclude5(cc, mk, t, p, q, r, s, queue, st, pc, trace, axiom):
    res = _add(cc, mk, t, p, r, queue, st, pc, trace, axiom, p, q, r, s, t)
    if res == 2:
        st[STATUS] = INCONSISTENT
        return True
    return False


@njit(cache=True)
def _sides(mk, t, x, dual):
    """Points ``s`` with ``tsx`` CCW (``stx`` for the dual law)."""
    if dual:
        return mk[t, x]
    return mk[x, t]


@njit(cache=True)
def _transitivity(cc, mk, x, y, z, dual, queue, st, pc, trace):
    """All instances of transitivity (or its dual) using the CCW fact ``xyz``.

    Returns the number of instances examined, or -1 on contradiction.  An
    instance counts as examined once all but its last free point are bound
    and their antecedents hold; the last point ranges over ``n - 4`` values.
    """
    n = cc.shape[0]
    n4 = n - 4
    axiom = AX5D if dual else AX5
    checks = 0
    for rot in range(3):
        if rot == 0:
            u, v, w = x, y, z
        elif rot == 1:
            u, v, w = y, z, x
        else:
            u, v, w = z, x, y
        # the fact fills one of the three slots containing both s and t
        if dual:
            s, t = u, v
            ts = mk[s, t]
        else:
            t, s = u, v
            ts = mk[t, s]
        # slot tsp
        p = w
        qs = ts & mk[t, p]
        for q in range(n):
            if not (qs >> q) & 1:
                continue
            checks += n4
            rs = ts & mk[t, q] & ~mk[t, p]
            for r in range(n):
                if (rs >> r) & 1:
                    if _conclude5(cc, mk, t, p, q, r, s, queue, st, pc, trace, axiom):
                        return -1
        # slot tsq
        q = w
        ps = ts & mk[q, t]
        for p in range(n):
            if not (ps >> p) & 1:
                continue
            checks += n4
            rs = ts & mk[t, q] & ~mk[t, p]
            for r in range(n):
                if (rs >> r) & 1:
                    if _conclude5(cc, mk, t, p, q, r, s, queue, st, pc, trace, axiom):
                        return -1
        # slot tsr
        r = w
        qs = ts & mk[r, t]
        for q in range(n):
            if not (qs >> q) & 1:
                continue
            checks += n4
            ps = ts & mk[q, t] & ~mk[r, t]
            for p in range(n):
                if (ps >> p) & 1:
                    if _conclude5(cc, mk, t, p, q, r, s, queue, st, pc, trace, axiom):
                        return -1
        # slots without s: the fact is tpq or tqr
        t = u
        p, q = v, w
        rs = mk[t, q] & ~mk[t, p]
        for r in range(n):
            if not (rs >> r) & 1:
                continue
            checks += n4
            ss = _sides(mk, t, p, dual) & _sides(mk, t, q, dual) & _sides(mk, t, r, dual)
            if ss:
                if _conclude5(cc, mk, t, p, q, r, _lowest(ss, n), queue, st, pc, trace, axiom):
                    return -1
        q, r = v, w
        ps = mk[q, t] & ~mk[r, t]
        for p in range(n):
            if not (ps >> p) & 1:
                continue
            checks += n4
            ss = _sides(mk, t, p, dual) & _sides(mk, t, q, dual) & _sides(mk, t, r, dual)
            if ss:
                if _conclude5(cc, mk, t, p, q, r, _lowest(ss, n), queue, st, pc, trace, axiom):
                    return -1
    return checks


@njit(cache=True)
def saturate(cc, mk, queue, st, pc, trace, use4, use5, use5d, mode, stop_when_complete):
    """Process the worklist until it is empty (or a contradiction is found)."""
    n = cc.shape[0]
    total = n * (n - 1) * (n - 2) // 6
    while st[TAIL] > st[HEAD]:
        if stop_when_complete and st[KNOWN] == total:
            st[HEAD] = st[TAIL]
            break
        if mode == FIFO:
            i = st[HEAD]
            st[HEAD] = i + 1
        else:
            last = st[TAIL] - 1
            if mode == RANDOM:
                j = np.random.randint(st[HEAD], st[TAIL])
                for col in range(3):
                    tmp = queue[j, col]
                    queue[j, col] = queue[last, col]
                    queue[last, col] = tmp
            i = last
            st[TAIL] = last
        a = queue[i, 0]
        b = queue[i, 1]
        c = queue[i, 2]
        st[POPS] += 1
        checks = 0
        if use4:
            # interiority: tqr & ptr & pqt => pqr; the three antecedent slots
            # are cyclic images of each other, so one slot per rotation suffices
            for rot in range(3):
                if rot == 0:
                    t, q, r = a, b, c
                elif rot == 1:
                    t, q, r = b, c, a
                else:
                    t, q, r = c, a, b
                checks += n - 3
                ps = mk[t, r] & mk[q, t] & ~mk[q, r]
                for p in range(n):
                    if (ps >> p) & 1:
                        res = _add(cc, mk, p, q, r, queue, st, pc, trace, AX4, p, q, r, t, -1)
                        if res == 2:
                            st[STATUS] = INCONSISTENT
                            return
        if use5:
            k = _transitivity(cc, mk, a, b, c, False, queue, st, pc, trace)
            if k < 0:
                return
            checks += k
        if use5d:
            k = _transitivity(cc, mk, a, b, c, True, queue, st, pc, trace)
            if k < 0:
                return
            checks += k
        st[CHECKS] += checks
        if checks > st[MAXCHK]:
            st[MAXCHK] = checks


@njit(cache=True)
def _buffers(n):
    cap = max(n * (n - 1) * (n - 2) // 6, 1)
    return (np.zeros((n, n, n), dtype=np.int8), np.zeros((n, n), dtype=np.int64),
            np.empty((cap, 3), dtype=np.int32), np.zeros(STATE_SIZE, dtype=np.int64),
            np.zeros((0, 0), dtype=np.int32), np.zeros((0, TRACE_WIDTH), dtype=np.int32))


@njit(cache=True)
def _complete_with(ot, edges, use4, use5, use5d, cc, mk, queue, st, pc, trace):
    n = ot.shape[0]
    cc[:] = 0
    mk[:] = 0
    st[:] = 0
    # seeding written out here: per-call array bookkeeping dominates otherwise
    t = 0
    for e in range(edges.shape[0]):
        a = edges[e, 0]
        b = edges[e, 1]
        for c in range(n):
            if c == a or c == b or cc[a, b, c] != 0:
                continue
            if ot[a, b, c] == 1:
                x, y, z = a, b, c
            else:
                x, y, z = a, c, b
            cc[x, y, z] = 1
            cc[y, z, x] = 1
            cc[z, x, y] = 1
            cc[x, z, y] = -1
            cc[z, y, x] = -1
            cc[y, x, z] = -1
            mk[x, y] |= ONE << z
            mk[y, z] |= ONE << x
            mk[z, x] |= ONE << y
            queue[t, 0] = x
            queue[t, 1] = y
            queue[t, 2] = z
            t += 1
    st[TAIL] = t
    st[KNOWN] = t
    saturate(cc, mk, queue, st, pc, trace, use4, use5, use5d, LIFO, True)
    return st[KNOWN] == n * (n - 1) * (n - 2) // 6


@njit(cache=True)
def closure_complete(ot, edges, use4, use5, use5d):
    """True iff the triples touching ``edges`` close to the complete order type ``ot``."""
    n = ot.shape[0]
    if n > MAX_N:
        raise ValueError("too many points for the closure engine")
    cc, mk, queue, st, pc, trace = _buffers(n)
    return _complete_with(ot, edges, use4, use5, use5d, cc, mk, queue, st, pc, trace)


@njit(cache=True)
def complement_has_triangle(adj):
    n = adj.shape[0]
    for a in range(n):
        for b in range(a + 1, n):
            if adj[a, b]:
                continue
            for c in range(b + 1, n):
                if not adj[a, c] and not adj[b, c]:
                    return True
    return False


@njit(cache=True)
def first_ot_subset(ot, pairs, k, use4, use5, use5d):
    """Lexicographically first ``k``-subset of ``pairs`` that is an OT-graph.

    Returns the chosen row indices, or an empty array when none works.
    """
    m = pairs.shape[0]
    if k > m:
        return np.empty(0, dtype=np.int64)
    if ot.shape[0] > MAX_N:
        raise ValueError("too many points for the closure engine")
    cc, mk, queue, st, pc, trace = _buffers(ot.shape[0])
    idx = np.arange(k)
    edges = np.empty((k, 2), dtype=np.int64)
    while True:
        for i in range(k):
            edges[i, 0] = pairs[idx[i], 0]
            edges[i, 1] = pairs[idx[i], 1]
        if _complete_with(ot, edges, use4, use5, use5d, cc, mk, queue, st, pc, trace):
            return idx.copy()
        # next combination
        i = k - 1
        while i >= 0 and idx[i] == m - k + i:
            i -= 1
        if i < 0:
            return np.empty(0, dtype=np.int64)
        idx[i] += 1
        for j in range(i + 1, k):
            idx[j] = idx[j - 1] + 1


@njit(cache=True)
def prune_edges(ot, edges, use4, use5, use5d):
    """Try dropping ``edges`` in row order; returns the mask of rows kept."""
    m = edges.shape[0]
    keep = np.ones(m, dtype=np.bool_)
    sub = np.empty((m, 2), dtype=np.int64)
    if ot.shape[0] > MAX_N:
        raise ValueError("too many points for the closure engine")
    cc, mk, queue, st, pc, trace = _buffers(ot.shape[0])
    for i in range(m):
        keep[i] = False
        k = 0
        for j in range(m):
            if keep[j]:
                sub[k, 0] = edges[j, 0]
                sub[k, 1] = edges[j, 1]
                k += 1
        if not _complete_with(ot, sub[:k], use4, use5, use5d, cc, mk, queue, st, pc, trace):
            keep[i] = True
    return keep
