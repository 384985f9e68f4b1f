"""Pure-Python scan kernel: reference implementation of the matching scan.

Enumerates matchings of the path graph on [1, n] in lexicographic order
(by ascending left endpoints, shorter prefixes first) while maintaining the
total discrepancy incrementally, and tracks the maximum, the first
minimum-size maximizer in enumeration order, the number of maximizers, and
the number of matchings evaluated.

The compiled kernel in _fast.pyx mirrors this function exactly; both must
stay behaviourally identical (see tests/test_kernels.py).
"""

from __future__ import annotations

BACKEND = "pure"


def scan_chunk(
    n: int,
    pair_of,
    side_of,
    diff,
    prefix,
    start: int,
    prune: bool,
    best_floor: int,
    abandon_above: int,
):
    """Scan every matching extending `prefix` with further swaps at >= start.

    pair_of, side_of: rank-indexed tables (index 0 unused), side +1 odd / -1 even.
    diff: per-pair signed imbalances BEFORE the prefix swaps are applied.
    prune: skip subtrees whose optimistic bound (+2 per placeable swap) falls
        strictly below max(best_floor, best found so far); sound because no
        swap changes the total by more than +2.
    best_floor: an already-achieved discrepancy from other chunks, or -1.
    abandon_above: if >= 0, stop as soon as any matching exceeds it.

    Returns (best_d, best_size, best_positions, count, nodes, abandoned):
    the maximum discrepancy seen, the size and left endpoints of the first
    minimum-size maximizer, how many evaluated matchings attained best_d,
    the number of matchings evaluated, and whether the scan abandoned early.
    """
    diff = list(diff)
    d = 0
    for v in diff:
        d += abs(v)
    cur = list(prefix)
    for i in prefix:
        pi, si = pair_of[i], side_of[i]
        d -= abs(diff[pi])
        diff[pi] += si
        d += abs(diff[pi])
        pj, sj = pair_of[i + 1], side_of[i + 1]
        d -= abs(diff[pj])
        diff[pj] -= sj
        d += abs(diff[pj])

    best_d = -1
    best_m = -1
    best: tuple[int, ...] = ()
    count = 0
    nodes = 0
    abandoned = False

    def visit(i: int) -> None:
        nonlocal d, best_d, best_m, best, count, nodes, abandoned
        nodes += 1
        m = len(cur)
        if d > best_d:
            best_d, best_m, best, count = d, m, tuple(cur), 1
        elif d == best_d:
            count += 1
            if m < best_m:
                best_m, best = m, tuple(cur)
        if 0 <= abandon_above < d:
            abandoned = True
            return
        j = i
        while j < n:
            pi, si = pair_of[j], side_of[j]
            d -= abs(diff[pi])
            diff[pi] += si
            d += abs(diff[pi])
            pj, sj = pair_of[j + 1], side_of[j + 1]
            d -= abs(diff[pj])
            diff[pj] -= sj
            d += abs(diff[pj])
            cur.append(j)

            floor_eff = best_floor if best_floor > best_d else best_d
            if not prune or d + 2 * ((n - j - 1) // 2) >= floor_eff:
                visit(j + 2)

            cur.pop()
            d -= abs(diff[pj])
            diff[pj] += sj
            d += abs(diff[pj])
            d -= abs(diff[pi])
            diff[pi] -= si
            d += abs(diff[pi])
            if abandoned:
                return
            j += 1

    visit(start)
    return best_d, best_m, best, count, nodes, abandoned
