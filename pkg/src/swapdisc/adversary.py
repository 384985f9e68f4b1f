"""Exact worst-case discrepancy over all allowed swap sets.

The allowed swap sets for parameter t are the matchings of the path graph
on [1, 4t]; there are Fibonacci(4t+1) of them.  The scan kernel walks all
of them (optionally with sound branch-and-bound pruning) and reports the
exact maximum together with a minimum-cardinality maximizer.

Work is split into chunks keyed by the first one or two swap positions; the
chunk list and the per-chunk pruning floors depend only on the instance, so
results (including the `enumerated` counter) are identical for any worker
count and scheduling order.
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass
from typing import Iterator

from . import _kernels
from .core import (
    DefiningSet,
    InvalidInput,
    SizeRefused,
    SwapSet,
    discrepancy,
    rank_table,
    validate_defining_set,
)

EXHAUSTIVE_MAX_RANKS = 40
MAXIMIZER_LIST_MAX_RANKS = 28


def fibonacci(k: int) -> int:
    """F(k) with F(1) = F(2) = 1."""
    if k < 1:
        raise InvalidInput(f"fibonacci index must be >= 1, got {k}")
    a, b = 1, 1
    for _ in range(k - 2):
        a, b = b, a + b
    return b


def count_swap_sets(t: int) -> int:
    """Number of matchings of the path on [1, 4t]: F(4t+1)."""
    return fibonacci(4 * t + 1)


def _positions_stream(n: int, start: int, cur: list[int]) -> Iterator[tuple[int, ...]]:
    yield tuple(cur)
    for j in range(start, n):
        cur.append(j)
        yield from _positions_stream(n, j + 2, cur)
        cur.pop()


def enumerate_swap_sets(t: int) -> Iterator[SwapSet]:
    """All allowed swap sets, lexicographic by ascending left endpoints,
    shorter prefixes first (so the empty set comes first)."""
    if t < 1:
        raise InvalidInput(f"t must be >= 1, got {t}")
    for positions in _positions_stream(4 * t, 1, []):
        yield SwapSet.from_positions(positions)


@dataclass(frozen=True)
class AdversaryResult:
    worst_case: int
    minimal_maximizer: SwapSet
    maximizer_count: int
    enumerated: int


def _chunks(n: int) -> list[tuple[tuple[int, ...], int]]:
    """Deterministic chunk list covering all matchings exactly once, in
    global lexicographic order: the empty matching, then for each first
    position j1 the singleton {(j1, j1+1)}, then the subtrees keyed by the
    first two positions."""
    out: list[tuple[tuple[int, ...], int]] = [((), n)]
    for j1 in range(1, n):
        out.append(((j1,), n))
        for j2 in range(j1 + 2, n):
            out.append(((j1, j2), j2 + 2))
    return out


def _fold(acc, nxt):
    best_d, best_m, best, count, nodes, abandoned = acc
    d2, m2, b2, c2, n2, a2 = nxt
    if d2 > best_d:
        best_d, best_m, best, count = d2, m2, b2, c2
    elif d2 == best_d:
        count += c2
        if m2 < best_m:
            best_m, best = m2, b2
    return best_d, best_m, best, count, nodes + n2, abandoned or a2


def _scan_star(args):
    return _kernels.scan_chunk(*args)


def _arrays(ds: DefiningSet) -> tuple[int, list[int], list[int], list[int]]:
    pair_of, side_of = rank_table(ds)
    pair_of.append(0)
    side_of.append(0)
    diff = [p.imbalance for p in ds.pairs]
    return ds.n_ranks, pair_of, side_of, diff


def _run(
    ds: DefiningSet,
    prune: bool,
    abandon_above: int,
    workers: int,
) -> tuple[int, int, tuple[int, ...], int, int, bool]:
    n, pair_of, side_of, diff = _arrays(ds)
    chunk_list = _chunks(n)
    acc = (-1, -1, (), 0, 0, False)

    if workers <= 1 or abandon_above >= 0:
        # abandon mode stays sequential so the early exit is deterministic
        for prefix, start in chunk_list:
            res = _kernels.scan_chunk(
                n, pair_of, side_of, diff, prefix, start, prune, -1, abandon_above
            )
            acc = _fold(acc, res)
            if acc[5]:
                break
        return acc

    args = [
        (n, pair_of, side_of, diff, prefix, start, prune, -1, -1)
        for prefix, start in chunk_list
    ]
    # processes, not threads: even the nogil compiled scan suffers badly from
    # cross-thread cache contention, while forked workers scale cleanly
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
        for res in pool.map(_scan_star, args, chunksize=max(1, len(args) // (8 * workers))):
            acc = _fold(acc, res)
    return acc


def _check_input(ds: DefiningSet) -> None:
    report = validate_defining_set(ds)
    if not report.ok:
        raise InvalidInput("invalid defining set: " + "; ".join(report.violations))


def _pick_strategy(ds: DefiningSet, strategy: str | None, force_exhaustive: bool) -> str:
    if strategy is None:
        strategy = "exhaustive" if ds.n_ranks <= EXHAUSTIVE_MAX_RANKS else "branch_and_bound"
    if strategy not in ("exhaustive", "branch_and_bound"):
        raise InvalidInput(f"unknown strategy {strategy!r}")
    if strategy == "exhaustive" and ds.n_ranks > EXHAUSTIVE_MAX_RANKS and not force_exhaustive:
        raise SizeRefused(
            f"exhaustive scan refused for 4t = {ds.n_ranks} > {EXHAUSTIVE_MAX_RANKS} "
            f"(F({4 * ds.t + 1}) matchings); pass force_exhaustive to override"
        )
    return strategy


def worst_case(
    ds: DefiningSet,
    strategy: str | None = None,
    workers: int = 1,
    force_exhaustive: bool = False,
) -> AdversaryResult:
    """Exact max of discrepancy(ds, I) over all allowed swap sets I.

    The minimal maximizer is the first minimum-size maximizer in enumeration
    order; both strategies and any worker count return identical results.
    """
    _check_input(ds)
    strategy = _pick_strategy(ds, strategy, force_exhaustive)
    best_d, _m, best, count, nodes, _ab = _run(
        ds, prune=(strategy == "branch_and_bound"), abandon_above=-1, workers=workers
    )
    return AdversaryResult(
        worst_case=best_d,
        minimal_maximizer=SwapSet.from_positions(best),
        maximizer_count=count,
        enumerated=nodes,
    )


def worst_case_bounded(
    ds: DefiningSet, cutoff: int, workers: int = 1
) -> tuple[AdversaryResult | None, bool]:
    """(result, exceeded): stop as soon as any swap set beats `cutoff`.

    If exceeded is True the defining set's worst case is > cutoff and the
    result is None; otherwise the result is exact (branch-and-bound scan).
    """
    _check_input(ds)
    best_d, _m, best, count, nodes, abandoned = _run(
        ds, prune=True, abandon_above=cutoff, workers=1
    )
    if abandoned:
        return None, True
    return (
        AdversaryResult(
            worst_case=best_d,
            minimal_maximizer=SwapSet.from_positions(best),
            maximizer_count=count,
            enumerated=nodes,
        ),
        False,
    )


def all_maximizers(ds: DefiningSet, force: bool = False) -> tuple[SwapSet, ...]:
    """Every swap set attaining the worst case, in enumeration order.

    Materializes the maximizers, so it is reserved for small instances
    (4t <= 28 unless forced).
    """
    _check_input(ds)
    if ds.n_ranks > MAXIMIZER_LIST_MAX_RANKS and not force:
        raise SizeRefused(
            f"maximizer listing refused for 4t = {ds.n_ranks} > {MAXIMIZER_LIST_MAX_RANKS}"
        )
    target = worst_case(ds).worst_case
    n, pair_of, side_of, diff = _arrays(ds)
    out: list[SwapSet] = []
    for positions in _positions_stream(n, 1, []):
        d = list(diff)
        for i in positions:
            d[pair_of[i]] += side_of[i]
            d[pair_of[i + 1]] -= side_of[i + 1]
        if sum(abs(v) for v in d) == target:
            out.append(SwapSet.from_positions(positions))
    return tuple(out)


def minimal_maximizer_property(ds: DefiningSet, res: AdversaryResult) -> bool:
    """Check that worst_case equals 2|I*| and that removing any single swap
    from I* lowers the discrepancy by exactly 2."""
    if res.worst_case != 2 * len(res.minimal_maximizer):
        return False
    positions = res.minimal_maximizer.positions()
    for i in positions:
        rest = SwapSet.from_positions(p for p in positions if p != i)
        if discrepancy(ds, rest) != res.worst_case - 2:
            return False
    return True
