import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _gen import SIX_VOTERS, instances
from kemenyscore import oracles
from kemenyscore.io import parse_instance
from kemenyscore.knapsack_bribery import (
    KnapsackInstance,
    reduce_dollar_to_knapsack,
    solve_dollar_bribery,
    solve_knapsack_value_dp,
    solve_ranking_deletion,
    verify_deletion_witness,
    verify_dollar_witness,
)
from kemenyscore.core import distance_to_profile, make_instance


@pytest.fixture
def six_voters():
    return parse_instance(SIX_VOTERS).instance


def brute_knapsack(weights, values, capacity):
    """(best value, lexicographically smallest min-weight subset reaching it)."""
    n = len(weights)
    best = None
    for size in range(n + 1):
        for sub in combinations(range(n), size):
            w = sum(weights[i] for i in sub)
            if w > capacity:
                continue
            key = (-sum(values[i] for i in sub), w, sub)
            if best is None or key < best:
                best = key
    return -best[0], best[2]


def test_reduction_on_six_voters(six_voters):
    kp = reduce_dollar_to_knapsack(six_voters)
    assert kp.values == (1, 1, 1, 0, 0, 2)
    assert kp.weights == (1,) * 6
    assert kp.capacity == 1 and kp.target == 2


def test_reduction_clamps_target_and_handles_empty(six_voters):
    assert reduce_dollar_to_knapsack(six_voters.replace(k=9)).target == 0
    empty = make_instance("a b", "a b", [], k=0)
    kp = reduce_dollar_to_knapsack(empty)
    assert len(kp) == 0 and kp.target == 0


@pytest.mark.parametrize(
    "items, cap, value, chosen",
    [
        ([(1, 2)], 1, 2, (0,)),
        ([(1, 1), (1, 1), (1, 1), (1, 0), (1, 0), (1, 2)], 1, 2, (5,)),
        ([(1, 3), (2, 4)], 0, 0, ()),
    ],
)
def test_knapsack_examples(items, cap, value, chosen):
    kp = KnapsackInstance(tuple(w for w, _ in items), tuple(v for _, v in items), cap, 0)
    sol = solve_knapsack_value_dp(kp)
    assert sol.value == value and sol.items == chosen


def test_knapsack_rejects_negative():
    with pytest.raises(ValueError):
        KnapsackInstance((1,), (-1,), 1, 0)
    with pytest.raises(ValueError):
        KnapsackInstance((1, 2), (1,), 1, 0)


def test_knapsack_matches_brute_force():
    rng = random.Random(42)
    for _ in range(400):
        n = rng.randint(0, 9)
        w = tuple(rng.randint(0, 6) for _ in range(n))
        v = tuple(rng.randint(0, 6) for _ in range(n))
        cap = rng.randint(0, 20)
        target = rng.randint(0, sum(v) + 2)
        sol = solve_knapsack_value_dp(KnapsackInstance(w, v, cap, target))
        value, subset = brute_knapsack(w, v, cap)
        assert (sol.value, sol.items) == (value, subset)
        assert sol.weight == sum(w[i] for i in subset)
        reach = [
            sum(w[i] for i in sub)
            for size in range(n + 1)
            for sub in combinations(range(n), size)
            if sum(v[i] for i in sub) >= target
        ]
        assert sol.min_weight_for_target == (min(reach) if reach else None)


def test_dollar_six_voters(six_voters):
    res = solve_dollar_bribery(six_voters)
    assert res.decision and res.witness == (5,) and res.cost == 1
    assert res.residual_distance == 3 and res.optimum == 1
    assert verify_dollar_witness(six_voters, res.witness)

    no = solve_dollar_bribery(six_voters.replace(budget=0))
    assert not no.decision and no.witness is None and no.optimum == 1

    free = solve_dollar_bribery(six_voters.replace(k=5, budget=0))
    assert free.decision and free.witness == () and free.optimum == 0


def test_ranking_deletion_six_voters(six_voters):
    res = solve_ranking_deletion(six_voters)
    assert res.decision and res.witness == (5,) and res.residual_distance == 3
    assert verify_deletion_witness(six_voters, res.witness)
    # dropping R_1 instead leaves distance 4
    kept = six_voters.profile[1:]
    assert distance_to_profile(six_voters.target, kept) == 4
    assert not verify_deletion_witness(six_voters, {0})


def test_delete_everything_within_budget(six_voters):
    inst = six_voters.replace(k=0, budget=6)
    assert verify_deletion_witness(inst, range(6))
    res = solve_ranking_deletion(inst)
    assert res.decision and res.residual_distance == 0


@settings(max_examples=200)
@given(instances(max_m=5, max_n=5))
def test_bribery_matches_oracle(inst):
    dollar, deletion = solve_dollar_bribery(inst), solve_ranking_deletion(inst)
    best = oracles.oracle_dollar(inst).optimum
    assert dollar.decision == deletion.decision == (best <= inst.budget)
    assert dollar.optimum == deletion.optimum == best
    if dollar.decision:
        assert verify_dollar_witness(inst, dollar.witness)
        assert verify_deletion_witness(inst, deletion.witness)


@given(st.integers(1, 5))
def test_verifiers_reject_out_of_range(n):
    inst = make_instance("a b", "a b", ["b a"] * n, k=0, budget=10)
    assert not verify_dollar_witness(inst, {n})
    assert not verify_deletion_witness(inst, {-1})
