"""$-bribery and ranking deletion via a reduction to value-bounded Knapsack.

Bribing ranking ``R_i`` (rewriting it to the target) and deleting it both
remove its distance ``KT(X, R_i)`` from the total, so both actions become
the same Knapsack instance: item ``i`` weighs ``cost(R_i)`` and is worth
``KT(X, R_i)``; capacity is the budget and the value target is ``D - k``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import ManipulationInstance, distance_to_profile, kendall_tau

_INF = np.int64(2**62)


@dataclass(frozen=True)
class KnapsackInstance:
    weights: tuple[int, ...]
    values: tuple[int, ...]
    capacity: int
    target: int

    def __post_init__(self):
        if len(self.weights) != len(self.values):
            raise ValueError("weights and values must have the same length")
        if min(self.weights + self.values, default=0) < 0 or self.capacity < 0:
            raise ValueError("weights, values and capacity must be non-negative")

    @property
    def items(self) -> tuple[tuple[int, int], ...]:
        return tuple(zip(self.weights, self.values))

    def __len__(self) -> int:
        return len(self.weights)


@dataclass(frozen=True)
class KnapsackSolution:
    value: int
    items: tuple[int, ...]
    weight: int
    # cheapest way to collect at least ``target`` value; None if unreachable
    min_weight_for_target: int | None


@dataclass(frozen=True)
class BriberyResult:
    decision: bool
    optimum: int  # minimum cost that brings the distance within k
    witness: tuple[int, ...] | None  # ranking indices (0-based) bribed or deleted
    cost: int | None
    residual_distance: int | None


def reduce_dollar_to_knapsack(instance: ManipulationInstance) -> KnapsackInstance:
    instance.require_complete()
    x = instance.target
    values = tuple(kendall_tau(x, r) for r in instance.profile)
    return KnapsackInstance(
        weights=tuple(instance.ranking_costs),
        values=values,
        capacity=instance.budget,
        target=max(sum(values) - instance.k, 0),
    )


def _get_bit(packed: np.ndarray, i: int) -> bool:
    if i >> 3 >= len(packed):
        return False
    return bool((packed[i >> 3] >> (7 - (i & 7))) & 1)


def solve_knapsack_value_dp(kp: KnapsackInstance) -> KnapsackSolution:
    """Exact Knapsack by dynamic programming over total value.

    ``f[v]`` holds the minimum weight of a subset worth exactly ``v``.  The
    table is built over item suffixes so the witness can be read off front to
    back, which yields the lexicographically smallest index set among the
    minimum-weight subsets of maximum value.
    """
    n = len(kp)
    total = sum(kp.values)
    f = np.full(total + 1, _INF, dtype=np.int64)
    f[0] = 0
    # take[i] bit v: including item i is optimal for value v over items i..n-1
    # only values up to the suffix sum are reachable, so each step touches f[:hi + 1]
    take: list[np.ndarray] = [None] * n
    hi = 0
    for i in range(n - 1, -1, -1):
        v, w = kp.values[i], kp.weights[i]
        hi += v
        cand = f[: hi + 1 - v] + w  # _INF + w stays above every finite entry
        seg = f[v : hi + 1]
        bits = np.zeros(hi + 1, dtype=bool)
        bits[v:] = (cand <= seg) & (cand < _INF)
        np.minimum(seg, cand, out=seg)
        take[i] = np.packbits(bits)

    feasible = np.flatnonzero(f <= kp.capacity)
    best = int(feasible[-1])
    if kp.target <= total:
        tail = int(f[kp.target :].min())
        min_w = tail if tail < _INF else None
    else:
        min_w = None

    chosen = []
    remaining = best
    for i in range(n):
        if remaining == 0:
            break
        if _get_bit(take[i], remaining):
            chosen.append(i)
            remaining -= kp.values[i]
    return KnapsackSolution(
        value=best,
        items=tuple(chosen),
        weight=int(f[best]),
        min_weight_for_target=min_w,
    )


def _solve(instance: ManipulationInstance) -> BriberyResult:
    kp = reduce_dollar_to_knapsack(instance)
    sol = solve_knapsack_value_dp(kp)
    optimum = sol.min_weight_for_target
    if sol.value < kp.target:
        return BriberyResult(False, optimum, None, None, None)
    residual = sum(kp.values) - sol.value
    return BriberyResult(True, optimum, sol.items, sol.weight, residual)


def solve_dollar_bribery(instance: ManipulationInstance) -> BriberyResult:
    """Decide whether rewriting some rankings to the target, within budget,
    brings the total distance to at most k."""
    return _solve(instance)


def solve_ranking_deletion(instance: ManipulationInstance) -> BriberyResult:
    """Same numbers as $-bribery: a deleted ranking contributes nothing, just
    like one rewritten to the target."""
    return _solve(instance)


def verify_dollar_witness(instance: ManipulationInstance, bribed) -> bool:
    bribed = set(bribed)
    if not bribed <= set(range(instance.n)):
        return False
    if instance.cost("per-ranking").total(bribed) > instance.budget:
        return False
    after = [instance.target if i in bribed else r for i, r in enumerate(instance.profile)]
    return distance_to_profile(instance.target, after) <= instance.k


def verify_deletion_witness(instance: ManipulationInstance, deleted) -> bool:
    deleted = set(deleted)
    if not deleted <= set(range(instance.n)):
        return False
    if instance.cost("per-ranking").total(deleted) > instance.budget:
        return False
    kept = [r for i, r in enumerate(instance.profile) if i not in deleted]
    return distance_to_profile(instance.target, kept) <= instance.k
