"""Domain types and balance primitives for defining sets under adjacent swaps.

A defining set over parameter t partitions the popularity ranks [1, 4t] into
t companion pairs; each pair holds two 2-element sets meant to have equal
sums.  An adjacent swap (i, i+1) exchanges the set membership of ranks i and
i+1, and the total discrepancy of a configuration is the sum over pairs of
the absolute difference of the two set sums.

Everything here is exact integer arithmetic on immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class InvalidInput(ValueError):
    """A value violates a structural precondition (bad shape, range, balance)."""


class SizeRefused(RuntimeError):
    """An exact computation was refused because the instance is too large."""


ODD = 1
EVEN = -1


@dataclass(frozen=True)
class CompanionPair:
    """Two disjoint 2-element rank sets; balanced when their sums agree.

    Balance is a predicate, not a constructor constraint: applying swaps can
    and does produce unbalanced pairs.
    """

    odd: frozenset[int]
    even: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "odd", frozenset(self.odd))
        object.__setattr__(self, "even", frozenset(self.even))
        # overlap between the sides is left to validate_defining_set so that
        # broken candidates (repeated ranks) stay representable
        for side in (self.odd, self.even):
            if len(side) != 2:
                raise InvalidInput(f"companion set needs exactly 2 ranks, got {sorted(side)}")
            for r in side:
                if not isinstance(r, int) or isinstance(r, bool) or r < 1:
                    raise InvalidInput(f"ranks must be integers >= 1, got {r!r}")

    @property
    def elements(self) -> frozenset[int]:
        return self.odd | self.even

    @property
    def sum_odd(self) -> int:
        return sum(self.odd)

    @property
    def sum_even(self) -> int:
        return sum(self.even)

    @property
    def imbalance(self) -> int:
        """Signed difference sum(odd) - sum(even)."""
        return self.sum_odd - self.sum_even

    @property
    def balanced(self) -> bool:
        return self.imbalance == 0

    def sorted_elements(self) -> tuple[int, int, int, int]:
        return tuple(sorted(self.elements))

    def translate(self, offset: int) -> "CompanionPair":
        return CompanionPair(
            frozenset(x + offset for x in self.odd),
            frozenset(x + offset for x in self.even),
        )


@dataclass(frozen=True)
class DefiningSet:
    """An ordered list of t companion pairs over the ranks [1, 4t].

    Only the shape is enforced here; partition and balance are checked by
    validate_defining_set so that broken candidates stay representable.
    """

    t: int
    pairs: tuple[CompanionPair, ...]

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(self.pairs))
        if not isinstance(self.t, int) or self.t < 1:
            raise InvalidInput(f"t must be a positive integer, got {self.t!r}")
        if len(self.pairs) != self.t:
            raise InvalidInput(f"expected {self.t} pairs, got {len(self.pairs)}")

    @property
    def n_ranks(self) -> int:
        return 4 * self.t

    @property
    def balanced(self) -> bool:
        return all(p.balanced for p in self.pairs)

    def total_discrepancy(self) -> int:
        return sum(abs(p.imbalance) for p in self.pairs)


def defining_set(t: int, pairs: Iterable[tuple[Iterable[int], Iterable[int]]]) -> DefiningSet:
    """Convenience constructor from ((odd, even), ...) iterables."""
    return DefiningSet(t, tuple(CompanionPair(frozenset(o), frozenset(e)) for o, e in pairs))


@dataclass(frozen=True)
class SwapSet:
    """A set of adjacent swaps (i, i+1) with pairwise distinct endpoints.

    Equivalently a matching of the path graph on the ranks; the upper range
    bound 4t-1 depends on t and is checked by the operations, not here.
    """

    swaps: frozenset[tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "swaps", frozenset(tuple(s) for s in self.swaps))
        seen: set[int] = set()
        for s in self.swaps:
            if len(s) != 2 or s[1] != s[0] + 1 or s[0] < 1:
                raise InvalidInput(f"swap {s} is not an adjacent pair (i, i+1) with i >= 1")
            if s[0] in seen or s[1] in seen:
                raise InvalidInput(f"swap {s} shares an endpoint with another swap")
            seen.update(s)

    @classmethod
    def from_positions(cls, positions: Iterable[int]) -> "SwapSet":
        return cls(frozenset((i, i + 1) for i in positions))

    def positions(self) -> tuple[int, ...]:
        """Left endpoints in ascending order."""
        return tuple(sorted(i for i, _ in self.swaps))

    def __len__(self) -> int:
        return len(self.swaps)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self.swaps))


EMPTY_SWAPS = SwapSet(frozenset())


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[str, ...]


def validate_defining_set(ds: DefiningSet) -> ValidationReport:
    """Check that ds partitions [1, 4t] and that every pair is balanced.

    Violations are data, not exceptions; each message names the offending
    pair index (1-based) or rank.
    """
    problems: list[str] = []
    n = ds.n_ranks
    counts: dict[int, int] = {}
    for idx, pair in enumerate(ds.pairs, start=1):
        for r in sorted(pair.odd) + sorted(pair.even):
            counts[r] = counts.get(r, 0) + 1
            if r > n:
                problems.append(f"pair {idx}: rank {r} outside [1, {n}]")
        if not pair.balanced:
            problems.append(
                f"pair {idx}: unbalanced (odd sum {pair.sum_odd} != even sum {pair.sum_even})"
            )
    for r, c in sorted(counts.items()):
        if c > 1:
            problems.append(f"rank {r}: appears {c} times")
    for r in range(1, n + 1):
        if r not in counts:
            problems.append(f"rank {r}: missing")
    return ValidationReport(ok=not problems, violations=tuple(problems))


def rank_table(ds: DefiningSet) -> tuple[list[int], list[int]]:
    """Index ranks 1..4t to (pair index 0..t-1, side ODD/EVEN).

    Requires ds to partition [1, 4t]; raises InvalidInput otherwise.
    """
    n = ds.n_ranks
    pair_of = [-1] * (n + 1)
    side_of = [0] * (n + 1)
    for p, pair in enumerate(ds.pairs):
        for r in pair.odd:
            if r > n or pair_of[r] != -1:
                raise InvalidInput(f"ranks do not partition [1, {n}] (rank {r})")
            pair_of[r] = p
            side_of[r] = ODD
        for r in pair.even:
            if r > n or pair_of[r] != -1:
                raise InvalidInput(f"ranks do not partition [1, {n}] (rank {r})")
            pair_of[r] = p
            side_of[r] = EVEN
    if any(p == -1 for p in pair_of[1:]):
        missing = next(r for r in range(1, n + 1) if pair_of[r] == -1)
        raise InvalidInput(f"ranks do not partition [1, {n}] (rank {missing} missing)")
    return pair_of, side_of


def check_swap_set(ds: DefiningSet, swaps: SwapSet) -> None:
    """Reject swap sets whose endpoints fall outside [1, 4t]."""
    for i, j in swaps:
        if j > ds.n_ranks:
            raise InvalidInput(f"swap ({i}, {j}) outside [1, {ds.n_ranks}]")


def apply_swaps(ds: DefiningSet, swaps: SwapSet) -> DefiningSet:
    """Exchange set membership of ranks i and i+1 for every swap (i, i+1).

    An involution: applying the same swap set twice restores the input.
    """
    check_swap_set(ds, swaps)
    pair_of, side_of = rank_table(ds)
    for i, j in swaps:
        pair_of[i], pair_of[j] = pair_of[j], pair_of[i]
        side_of[i], side_of[j] = side_of[j], side_of[i]
    odd_sets: list[set[int]] = [set() for _ in range(ds.t)]
    even_sets: list[set[int]] = [set() for _ in range(ds.t)]
    for r in range(1, ds.n_ranks + 1):
        (odd_sets if side_of[r] == ODD else even_sets)[pair_of[r]].add(r)
    return DefiningSet(
        ds.t,
        tuple(
            CompanionPair(frozenset(o), frozenset(e)) for o, e in zip(odd_sets, even_sets)
        ),
    )


def discrepancy(ds: DefiningSet, swaps: SwapSet) -> int:
    """Total discrepancy sum_i |sum(odd_i') - sum(even_i')| after the swaps."""
    return apply_swaps(ds, swaps).total_discrepancy()


@dataclass(frozen=True)
class PairType:
    """Structural form of a balanced pair's four sorted elements.

    kind 1: {a, a+b, a+b+1, a+2b+1}, b >= 2 under this classifier
    kind 2: {a, a+b, a+b+c, a+2b+c}, b, c > 1
    kind 3: {a, a+1, a+1+b, a+2+b}, b >= 1
    """

    kind: int
    a: int
    b: int
    c: int | None = None

    @property
    def params(self) -> tuple[int, ...]:
        return (self.a, self.b) if self.c is None else (self.a, self.b, self.c)


def classify_pair(cp: CompanionPair) -> PairType:
    """Classify a balanced pair; exactly one of the three kinds applies.

    The consecutive-run set {a, a+1, a+2, a+3} matches the kind-3 branch
    first, so kind 1 effectively has b >= 2.
    """
    if not cp.balanced:
        raise InvalidInput(f"cannot classify unbalanced pair {sorted(cp.elements)}")
    l1, l2, l3, l4 = cp.sorted_elements()
    if l2 - l1 == 1:
        return PairType(kind=3, a=l1, b=l3 - l2)
    if l3 - l2 == 1:
        return PairType(kind=1, a=l1, b=l2 - l1)
    return PairType(kind=2, a=l1, b=l2 - l1, c=l3 - l2)


@dataclass(frozen=True)
class SwapGroups:
    """The two candidate-swap families around a kind-1 or kind-2 pair.

    Every swap in group_a pushes the pair's signed imbalance one way, every
    swap in group_b the other way.  Swaps reaching outside [1, 4t] are kept
    and listed in boundary_a/boundary_b (they stand for the virtual swaps
    (0,1) and (4t, 4t+1)); overlap_a/overlap_b list endpoints shared by two
    swaps of the same group, which happens for small b or c.
    """

    group_a: tuple[tuple[int, int], ...]
    group_b: tuple[tuple[int, int], ...]
    boundary_a: tuple[tuple[int, int], ...]
    boundary_b: tuple[tuple[int, int], ...]
    overlap_a: frozenset[int]
    overlap_b: frozenset[int]


def _group_meta(
    group: tuple[tuple[int, int], ...], n_ranks: int | None
) -> tuple[tuple[tuple[int, int], ...], frozenset[int]]:
    boundary = tuple(
        s for s in group if s[0] < 1 or (n_ranks is not None and s[1] > n_ranks)
    )
    seen: set[int] = set()
    shared: set[int] = set()
    for s in group:
        for x in s:
            (shared if x in seen else seen).add(x)
    return boundary, frozenset(shared)


def swap_groups(cp: CompanionPair, t: int | None = None) -> SwapGroups:
    """Instantiate the two swap families for a kind-1 or kind-2 pair.

    With t given, high-end boundary swaps are detected against 4t; without
    it only the low-end swap (0, 1) can be flagged.
    """
    pt = classify_pair(cp)
    if pt.kind == 3:
        raise InvalidInput("swap groups are defined only for kind-1 and kind-2 pairs")
    a, b = pt.a, pt.b
    if pt.kind == 1:
        group_a = ((a - 1, a), (a + b + 1, a + b + 2), (a + 2 * b, a + 2 * b + 1))
        group_b = ((a, a + 1), (a + b - 1, a + b), (a + 2 * b + 1, a + 2 * b + 2))
    else:
        c = pt.c
        group_a = (
            (a - 1, a),
            (a + b, a + b + 1),
            (a + b + c, a + b + c + 1),
            (a + 2 * b + c - 1, a + 2 * b + c),
        )
        group_b = (
            (a, a + 1),
            (a + b - 1, a + b),
            (a + b + c - 1, a + b + c),
            (a + 2 * b + c, a + 2 * b + c + 1),
        )
    n_ranks = 4 * t if t is not None else None
    boundary_a, overlap_a = _group_meta(group_a, n_ranks)
    boundary_b, overlap_b = _group_meta(group_b, n_ranks)
    return SwapGroups(group_a, group_b, boundary_a, boundary_b, overlap_a, overlap_b)


def pair_swap_effect(cp: CompanionPair, swap: tuple[int, int]) -> int:
    """Signed change of sum(odd) - sum(even) if the single swap were applied.

    Accepts the virtual boundary swaps: (0, 1) decrements rank 1, and any
    (m, m+1) with m the pair's largest element increments it.
    """
    i, j = swap
    delta = 0
    if i in cp.odd:
        delta += 1
    elif i in cp.even:
        delta -= 1
    if j in cp.odd:
        delta -= 1
    elif j in cp.even:
        delta += 1
    return delta


def canonicalize(ds: DefiningSet) -> DefiningSet:
    """Normalize roles and order: odd set carries each quadruple's minimum,
    pairs sorted by minimum element."""
    fixed = [
        p if min(p.elements) in p.odd else CompanionPair(p.even, p.odd) for p in ds.pairs
    ]
    fixed.sort(key=lambda p: min(p.elements))
    return DefiningSet(ds.t, tuple(fixed))


def reflect(ds: DefiningSet) -> DefiningSet:
    """Mirror every rank through x -> 4t+1-x, preserving roles and order."""
    m = ds.n_ranks + 1
    return DefiningSet(
        ds.t,
        tuple(
            CompanionPair(
                frozenset(m - x for x in p.odd), frozenset(m - x for x in p.even)
            )
            for p in ds.pairs
        ),
    )


def reflect_swaps(ds_t: int, swaps: SwapSet) -> SwapSet:
    """Image of a swap set under the same reflection: (i, i+1) -> (4t-i, 4t-i+1)."""
    n = 4 * ds_t
    return SwapSet.from_positions(n - i for i in swaps.positions())
