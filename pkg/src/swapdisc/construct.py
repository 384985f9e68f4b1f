"""The recursive defining-set family t = 5*2^(z-2) - 1 and its bounds.

Level z = 2 is the unique optimal t = 4 set; each recursive step embeds two
shifted copies of the previous level between a closing pair {1, 5*2^(z+1)-4}
and {5*2^z-2, 5*2^z-1}.  The worst case d_z of level z obeys
d_{z+1} <= 2*d_z + 2, giving d_z <= 2^(z+1) - 2 = (8t - 2) / 5.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .adversary import EXHAUSTIVE_MAX_RANKS, worst_case
from .core import (
    CompanionPair,
    DefiningSet,
    InvalidInput,
    SizeRefused,
    defining_set,
    validate_defining_set,
)

DEFAULT_MAX_RANKS = 1_000_000


def t_for_z(z: int) -> int:
    """Pair count of construction level z: 5*2^(z-2) - 1."""
    if z < 2:
        raise InvalidInput(f"construction levels start at z = 2, got {z}")
    return 5 * 2 ** (z - 2) - 1


def z_for_t(t: int) -> int | None:
    """Inverse of t_for_z, or None if t is not in the family."""
    z = 2
    while t_for_z(z) <= t:
        if t_for_z(z) == t:
            return z
        z += 1
    return None


def base_case() -> DefiningSet:
    """The unique optimal defining set for t = 4 (worst case 6)."""
    return defining_set(
        4,
        (
            ({1, 16}, {8, 9}),
            ({2, 7}, {4, 5}),
            ({10, 15}, {12, 13}),
            ({3, 14}, {6, 11}),
        ),
    )


def recursive_step(prev: DefiningSet, z: int) -> DefiningSet:
    """Build level z+1 from the level-z set.

    Copy 1 is prev shifted by +1, copy 2 by +(5*2^z - 1); the closing pair
    {1, 5*2^(z+1)-4} / {5*2^z-2, 5*2^z-1} has both sums 5*2^(z+1) - 3.
    """
    t2 = t_for_z(z)
    if prev.t != t2:
        raise InvalidInput(f"level-{z} input must have t = {t2}, got {prev.t}")
    report = validate_defining_set(prev)
    if not report.ok:
        raise InvalidInput("level input invalid: " + "; ".join(report.violations))
    shift2 = 5 * 2**z - 1
    closing = CompanionPair(
        frozenset({1, 5 * 2 ** (z + 1) - 4}),
        frozenset({5 * 2**z - 2, 5 * 2**z - 1}),
    )
    pairs = (
        tuple(p.translate(1) for p in prev.pairs)
        + tuple(p.translate(shift2) for p in prev.pairs)
        + (closing,)
    )
    return DefiningSet(2 * t2 + 1, pairs)


def construct_for_z(z: int, max_ranks: int = DEFAULT_MAX_RANKS) -> DefiningSet:
    """Iterate the recursion from the base case up to level z."""
    if z < 2:
        raise InvalidInput(f"construction levels start at z = 2, got {z}")
    if 4 * t_for_z(z) > max_ranks:
        raise SizeRefused(
            f"level {z} needs {4 * t_for_z(z)} ranks, above the cap {max_ranks}"
        )
    ds = base_case()
    for level in range(2, z):
        ds = recursive_step(ds, level)
    return ds


def lower_bound(t: int) -> Fraction:
    """(3t - 2) / 2, valid for every balanced defining set."""
    if t < 1:
        raise InvalidInput(f"t must be >= 1, got {t}")
    return Fraction(3 * t - 2, 2)


def upper_bound(z: int) -> int:
    """2^(z+1) - 2, the worst case guaranteed by the level-z construction."""
    if z < 2:
        raise InvalidInput(f"construction levels start at z = 2, got {z}")
    return 2 ** (z + 1) - 2


def upper_bound_for_t(t: int) -> int:
    """(8t - 2) / 5 for t in the family; equals upper_bound(z_for_t(t))."""
    z = z_for_t(t)
    if z is None:
        raise InvalidInput(f"t = {t} is not of the form 5*2^(z-2) - 1")
    assert (8 * t - 2) % 5 == 0
    return (8 * t - 2) // 5


@dataclass(frozen=True)
class Lemma1Report:
    z: int
    d_z: int
    d_z_plus_1: int
    bound: int
    holds: bool


def check_lemma1(z: int, workers: int = 1) -> Lemma1Report:
    """Exact d_z and d_{z+1} via full scans; holds iff d_{z+1} <= 2*d_z + 2.

    Refused when either level exceeds the exhaustive envelope (in practice
    only z = 2 is checkable: level 3 already takes F(37) = 24,157,817
    matchings, level 4 would need F(77)).
    """
    for level in (z, z + 1):
        if 4 * t_for_z(level) > EXHAUSTIVE_MAX_RANKS:
            raise SizeRefused(
                f"level {level} has 4t = {4 * t_for_z(level)} ranks, beyond the "
                f"exhaustive envelope of {EXHAUSTIVE_MAX_RANKS}"
            )
    d_z = worst_case(construct_for_z(z), strategy="exhaustive", workers=workers).worst_case
    d_z1 = worst_case(
        construct_for_z(z + 1), strategy="exhaustive", workers=workers
    ).worst_case
    return Lemma1Report(z=z, d_z=d_z, d_z_plus_1=d_z1, bound=2 * d_z + 2, holds=d_z1 <= 2 * d_z + 2)
