# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan kernel.  Mirrors _kernels/pure.py exactly; keep in sync.

The scan releases the GIL, so chunks can run on real threads.
"""

from libc.stdlib cimport malloc, free

BACKEND = "compiled"


cdef struct St:
    int n
    int* pair_of
    int* side_of
    int* diff
    int* cur
    int* best
    int d
    int depth
    int best_d
    int best_m
    long long count
    long long nodes
    bint prune
    int best_floor
    int abandon_above
    bint abandoned


cdef inline int iabs(int x) nogil:
    return x if x >= 0 else -x


cdef void visit(St* s, int i) nogil:
    cdef int j, k, pi, si, pj, sj, floor_eff
    s.nodes += 1
    if s.d > s.best_d:
        s.best_d = s.d
        s.best_m = s.depth
        s.count = 1
        for k in range(s.depth):
            s.best[k] = s.cur[k]
    elif s.d == s.best_d:
        s.count += 1
        if s.depth < s.best_m:
            s.best_m = s.depth
            for k in range(s.depth):
                s.best[k] = s.cur[k]
    if 0 <= s.abandon_above < s.d:
        s.abandoned = True
        return
    j = i
    while j < s.n:
        pi = s.pair_of[j]
        si = s.side_of[j]
        s.d -= iabs(s.diff[pi])
        s.diff[pi] += si
        s.d += iabs(s.diff[pi])
        pj = s.pair_of[j + 1]
        sj = s.side_of[j + 1]
        s.d -= iabs(s.diff[pj])
        s.diff[pj] -= sj
        s.d += iabs(s.diff[pj])
        s.cur[s.depth] = j
        s.depth += 1

        floor_eff = s.best_floor if s.best_floor > s.best_d else s.best_d
        if (not s.prune) or s.d + 2 * ((s.n - j - 1) // 2) >= floor_eff:
            visit(s, j + 2)

        s.depth -= 1
        s.d -= iabs(s.diff[pj])
        s.diff[pj] += sj
        s.d += iabs(s.diff[pj])
        s.d -= iabs(s.diff[pi])
        s.diff[pi] -= si
        s.d += iabs(s.diff[pi])
        if s.abandoned:
            return
        j += 1


def scan_chunk(
    int n,
    pair_of,
    side_of,
    diff,
    prefix,
    int start,
    bint prune,
    int best_floor,
    int abandon_above,
):
    """See _kernels.pure.scan_chunk for the contract."""
    cdef int t = len(diff)
    cdef int cap = n // 2 + 2
    cdef St s
    cdef int i, pi, si, pj, sj
    cdef object result

    s.n = n
    s.pair_of = <int*> malloc((n + 2) * sizeof(int))
    s.side_of = <int*> malloc((n + 2) * sizeof(int))
    s.diff = <int*> malloc((t if t > 0 else 1) * sizeof(int))
    s.cur = <int*> malloc(cap * sizeof(int))
    s.best = <int*> malloc(cap * sizeof(int))
    if not (s.pair_of and s.side_of and s.diff and s.cur and s.best):
        free(s.pair_of); free(s.side_of); free(s.diff); free(s.cur); free(s.best)
        raise MemoryError()
    try:
        s.pair_of[0] = 0
        s.side_of[0] = 0
        s.pair_of[n + 1] = 0
        s.side_of[n + 1] = 0
        for i in range(1, n + 1):
            s.pair_of[i] = pair_of[i]
            s.side_of[i] = side_of[i]
        s.d = 0
        for i in range(t):
            s.diff[i] = diff[i]
            s.d += iabs(s.diff[i])
        s.depth = 0
        for i in prefix:
            pi = s.pair_of[i]
            si = s.side_of[i]
            s.d -= iabs(s.diff[pi])
            s.diff[pi] += si
            s.d += iabs(s.diff[pi])
            pj = s.pair_of[i + 1]
            sj = s.side_of[i + 1]
            s.d -= iabs(s.diff[pj])
            s.diff[pj] -= sj
            s.d += iabs(s.diff[pj])
            s.cur[s.depth] = i
            s.depth += 1
        s.best_d = -1
        s.best_m = -1
        s.count = 0
        s.nodes = 0
        s.prune = prune
        s.best_floor = best_floor
        s.abandon_above = abandon_above
        s.abandoned = False

        with nogil:
            visit(&s, start)

        result = (
            s.best_d,
            s.best_m,
            tuple(s.best[i] for i in range(s.best_m)) if s.best_m >= 0 else (),
            s.count,
            s.nodes,
            bool(s.abandoned),
        )
    finally:
        free(s.pair_of)
        free(s.side_of)
        free(s.diff)
        free(s.cur)
        free(s.best)
    return result
