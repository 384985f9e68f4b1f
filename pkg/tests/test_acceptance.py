"""Acceptance suite: one test per acceptance criterion, exact tolerances.

Each test prints a single `[criterion N] PASS/FAIL` line (run with -s to see
them); timings are wall-clock and asserted against the stated budgets.

Populations: criterion 7 and 8 share the same instances, namely every
canonical balanced set at t <= 2 plus 1000 seeded random balanced sets at
each of t = 3 and t = 4, evaluated with the literal (original-set)
membership convention.
"""

import math
import time
from random import Random

import pytest

from naive_oracles import naive_discrepancy, random_swap_positions
from swapdisc.adversary import (
    count_swap_sets,
    minimal_maximizer_property,
    worst_case,
)
from swapdisc.construct import (
    base_case,
    construct_for_z,
    lower_bound,
    recursive_step,
    upper_bound,
)
from swapdisc.core import (
    SwapSet,
    apply_swaps,
    canonicalize,
    defining_set,
    discrepancy,
    reflect,
    reflect_swaps,
    validate_defining_set,
)
from swapdisc.graphs import verify_lemma2, verify_prop1, verify_prop2
from swapdisc.optsearch import enumerate_balanced, find_optimal, random_balanced

OPT2 = defining_set(2, (({1, 8}, {3, 6}), ({2, 7}, {4, 5})))
SUB2 = defining_set(2, (({1, 4}, {2, 3}), ({5, 8}, {6, 7})))


def report(criterion: int, ok: bool, detail: str) -> None:
    print(f"[criterion {criterion}] {'PASS' if ok else 'FAIL'}: {detail}")
    assert ok, f"criterion {criterion}: {detail}"


@pytest.fixture(scope="module")
def population():
    """(ds, adversary result) for criteria 7 and 8."""
    instances = []
    for t in (1, 2):
        instances.extend(enumerate_balanced(t))
    rng3, rng4 = Random(20250810), Random(20250811)
    instances.extend(random_balanced(3, rng3) for _ in range(1000))
    instances.extend(random_balanced(4, rng4) for _ in range(1000))
    return [(ds, worst_case(ds, strategy="branch_and_bound")) for ds in instances]


def test_criterion_1_full_search_t2():
    started = time.perf_counter()
    res = find_optimal(2)
    elapsed = time.perf_counter() - started
    ok = (
        res.d_star == 4
        and canonicalize(OPT2) in res.optima
        and res.certified
        and elapsed < 5.0
    )
    report(1, ok, f"D*(2) = {res.d_star}, optimal example found, {elapsed:.2f}s < 5s")


def test_criterion_2_suboptimal_t2_worst_case_6():
    started = time.perf_counter()
    res = worst_case(SUB2)
    elapsed = time.perf_counter() - started
    ok = res.worst_case == 6 and elapsed < 1.0
    report(2, ok, f"suboptimal t=2 worst case = {res.worst_case}, {elapsed:.3f}s < 1s")


def test_criterion_3_base_case_worst_case_6():
    started = time.perf_counter()
    res = worst_case(base_case(), strategy="exhaustive")
    elapsed = time.perf_counter() - started
    ok = res.worst_case == 6 and res.enumerated == 1597 and elapsed < 1.0
    report(
        3,
        ok,
        f"worst_case(base_case) = {res.worst_case} over {res.enumerated} swap sets, "
        f"{elapsed:.3f}s < 1s",
    )


def test_criterion_4_full_search_t4_unique_optimum():
    started = time.perf_counter()
    res = find_optimal(4, workers=2)
    elapsed = time.perf_counter() - started
    ok = (
        res.d_star == 6
        and res.optima == (canonicalize(base_case()),)
        and res.certified
        and elapsed < 3600.0
    )
    report(
        4,
        ok,
        f"D*(4) = {res.d_star}, unique canonical optimum = base case, "
        f"{res.candidates_examined} candidates, {elapsed:.1f}s < 1h",
    )


def test_criterion_5_exact_d3_brute_force():
    ds = construct_for_z(3)
    started = time.perf_counter()
    res = worst_case(ds, strategy="exhaustive", workers=2)
    elapsed = time.perf_counter() - started
    witness = res.minimal_maximizer
    naive_pairs = [(set(p.odd), set(p.even)) for p in ds.pairs]
    ok = (
        res.worst_case == 14
        and res.enumerated == 24_157_817 == count_swap_sets(9)
        and naive_discrepancy(naive_pairs, witness.positions()) == 14
        and 14 <= 2 * 6 + 2
        and 14 == upper_bound(3)
        and elapsed < 600.0
    )
    report(
        5,
        ok,
        f"d_3 = {res.worst_case} over {res.enumerated} matchings, witness "
        f"independently re-evaluated, doubling bound 14 <= 2*6+2 with the "
        f"closed form attained at level 3, {elapsed:.1f}s < 10min",
    )


def test_criterion_6_bound_sandwich():
    details = []
    ok = True
    for t in (1, 2, 3, 4):
        d_star = find_optimal(t).d_star
        lb = lower_bound(t)
        ceil_even = math.ceil(lb)
        if ceil_even % 2:
            ceil_even += 1
        ok = ok and ceil_even <= d_star
        details.append(f"t={t}: {ceil_even} <= {d_star}")
    report(6, ok, "; ".join(details))


def test_criterion_7_eq8_population(population):
    violations = 0
    for ds, res in population:
        if res.worst_case != 2 * len(res.minimal_maximizer):
            violations += 1
        elif not minimal_maximizer_property(ds, res):
            violations += 1
    ok = violations == 0
    report(7, ok, f"worst_case = 2|I*| on {len(population)} instances, {violations} violations")


def test_criterion_8_lemma2_eq10_prop1_population(population):
    violations = 0
    for ds, res in population:
        i_star = res.minimal_maximizer
        rep = verify_lemma2(ds, i_star, membership="original")
        p1c = verify_prop1(ds, i_star, subsets="components", membership="original")
        p1s = verify_prop1(ds, i_star, subsets="singletons", membership="original")
        if not (rep.all_hold and p1c.all_hold and p1s.all_hold):
            violations += 1
    ok = violations == 0
    report(
        8,
        ok,
        f"component arc bound, global edge bound, and in(V) <= d(V) under "
        f"literal membership on {len(population)} instances, {violations} violations",
    )


def test_criterion_9_prop2_spot_checks():
    iso1 = defining_set(3, (({1, 10}, {5, 6}), ({2, 11}, {4, 9}), ({3, 12}, {7, 8})))
    res1 = worst_case(iso1)
    rep1 = verify_prop2(iso1, res1.minimal_maximizer)
    e1 = next(e for e in rep1.entries if e.node == 3)

    iso2 = defining_set(
        4,
        (({1, 16}, {7, 10}), ({2, 14}, {3, 13}), ({4, 11}, {6, 9}), ({5, 15}, {8, 12})),
    )
    res2 = worst_case(iso2)
    rep2 = verify_prop2(iso2, res2.minimal_maximizer)
    e2 = next(e for e in rep2.entries if e.node == 4)

    ok = (
        e1.kind == 1
        and e1.d_swp == 0
        and e1.total == 3
        and e2.kind == 2
        and e2.d_swp == 0
        and e2.total == 4
    )
    report(
        9,
        ok,
        f"isolated type-1 node: d+d_out = {e1.total} (want 3); "
        f"isolated type-2 node: d+d_out = {e2.total} (want 4)",
    )


def test_criterion_10_structural_invariant_suite():
    started = time.perf_counter()
    cases = 0
    ok = True

    # involution of apply_swaps on random instances
    rng = Random(101)
    for _ in range(4000):
        t = rng.randint(1, 5)
        ds = random_balanced(t, rng)
        swaps = SwapSet.from_positions(random_swap_positions(t, rng))
        ok = ok and apply_swaps(apply_swaps(ds, swaps), swaps) == ds
        cases += 1

    # discrepancy parity on random perturbations
    for _ in range(3000):
        t = rng.randint(1, 4)
        ds = random_balanced(t, rng)
        swaps = SwapSet.from_positions(random_swap_positions(t, rng))
        ok = ok and discrepancy(ds, swaps) % 2 == 0
        cases += 1

    # partition validity and closing-pair balance of each construction level
    for z in (2, 3, 4, 5):
        ds = construct_for_z(z)
        ok = ok and validate_defining_set(ds).ok
        last = ds.pairs[-1]
        ok = ok and last.sum_odd == last.sum_even == 5 * 2**z - 3
        stepped = recursive_step(ds, z)
        closing = stepped.pairs[-1]
        ok = ok and closing.sum_odd == closing.sum_even == 5 * 2 ** (z + 1) - 3
        cases += 3

    # evenness of worst-case values across small instances
    evens = list(enumerate_balanced(1)) + list(enumerate_balanced(2))
    evens += [random_balanced(3, rng) for _ in range(500)]
    for ds in evens:
        ok = ok and worst_case(ds, strategy="branch_and_bound").worst_case % 2 == 0
        cases += 1

    # reflection invariance of the worst case and of discrepancy at t=2
    for ds in enumerate_balanced(2):
        ok = ok and worst_case(ds).worst_case == worst_case(reflect(ds)).worst_case
        cases += 1
        for _ in range(450):
            swaps = SwapSet.from_positions(random_swap_positions(2, rng))
            ok = ok and discrepancy(ds, swaps) == discrepancy(
                reflect(ds), reflect_swaps(2, swaps)
            )
            cases += 1

    elapsed = time.perf_counter() - started
    ok = ok and cases >= 10_000 and elapsed < 120.0
    report(10, ok, f"{cases} generated cases, all invariants hold, {elapsed:.1f}s < 2min")
