"""Swap bribery: the four-index dynamic program, witness extraction as explicit
adjacent-swap scripts, and a greedy cross-check.

Table semantics (rankings 1-based)::

    T[1, s1, 0, j]  = s1 * c_1                          if d_1 - s1 <= j
    T[i, s1, s2, j] = min_{a + b = s2} T[i-1, a, b, j - d_i + s1] + s1 * c_i

where ``d_i = KT(X, R_i)`` and ``c_i`` is the per-swap cost of ``R_i``.
Entries with ``s1 > d_i``, ``s2 > d_1 + ... + d_{i-1}`` or a negative
distance slack are infinite.

Inside the split minimum the slack condition only depends on ``a + b``, so
layer ``i - 1`` is fully described by ``best[t] = min_{a + b = t} T[i-1, a, b, .]``
(finite exactly when the prefix distance ``P_{i-1} - t`` is within the
slack).  :class:`SwapDPTable` stores those per-layer vectors restricted to
``t >= P_i - k`` (smaller totals can never meet ``j <= k``) and answers any
``T[i, s1, s2, j]`` query from them.  :func:`literal_swap_table` fills the
dense table straight from the recurrence for small cross-checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Sequence

import numpy as np

from .core import (
    ManipulationInstance,
    Ranking,
    apply_adjacent_swap,
    find_admissible_disagreement,
    kendall_tau,
)

INF = math.inf


@dataclass(frozen=True)
class SwapWitness:
    per_ranking_swaps: tuple[int, ...]
    total_cost: int
    # 1-based adjacent positions swapped, in execution order, per ranking
    swap_script: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class SwapResult:
    decision: bool
    min_cost: int
    witness: SwapWitness | None
    allocation: tuple[int, ...]  # the min-cost swap counts, reported even on NO


def swap_dp_base(d1: int, c1: int, s1: int, j: int) -> float:
    """Base row of the table: ``T[1, s1, 0, j]``."""
    if not 0 <= s1 <= d1 or j < 0:
        return INF
    return s1 * c1 if d1 - s1 <= j else INF


class SwapDPTable:
    """Min-cost table for swap bribery, stored one layer per ranking.

    Layer ``i`` keeps ``best[t]`` for ``t`` in ``[lo_i, P_i]`` together with
    the ``s1`` that attains it, which is all that backtracking needs.
    """

    def __init__(self, distances: Sequence[int], costs: Sequence[int], k: int):
        self.distances = tuple(int(d) for d in distances)
        self.costs = tuple(int(c) for c in costs)
        self.k = int(k)
        if len(self.distances) != len(self.costs):
            raise ValueError("one cost per ranking is required")
        self.n = len(self.distances)
        self.prefix = tuple(np.cumsum((0,) + self.distances).tolist())  # P_0..P_n
        self._best: list[np.ndarray] = [np.zeros(1)]  # layer 0: only t = 0
        self._arg: list[np.ndarray] = [np.zeros(1, dtype=np.int64)]
        self._lo: list[int] = [0]
        for i in range(1, self.n + 1):
            self._fill(i)

    def _fill(self, i: int) -> None:
        d, c = self.distances[i - 1], self.costs[i - 1]
        prev, prev_lo = self._best[i - 1], self._lo[i - 1]
        hi = self.prefix[i]
        lo = max(0, hi - self.k)
        width = hi - lo + 1
        best = np.full(width, INF)
        arg = np.full(width, -1, dtype=np.int64)
        t = np.arange(lo, hi + 1)
        for s1 in range(d + 1):
            src = t - s1 - prev_lo
            ok = (src >= 0) & (src < len(prev))
            cand = np.full(width, INF)
            cand[ok] = prev[src[ok]] + s1 * c
            better = cand < best
            best[better] = cand[better]
            arg[better] = s1
        self._best.append(best)
        self._arg.append(arg)
        self._lo.append(lo)

    def _prefix_best(self, i: int, t: int) -> float:
        lo = self._lo[i]
        if t < lo or t > self.prefix[i]:
            return INF
        return float(self._best[i][t - lo])

    def entry(self, i: int, s1: int, s2: int, j: int) -> float:
        """``T[i, s1, s2, j]`` for ``1 <= i <= n`` and ``0 <= j <= k``."""
        if not 1 <= i <= self.n:
            raise IndexError(f"ranking index {i} outside 1..{self.n}")
        d, c = self.distances[i - 1], self.costs[i - 1]
        if not 0 <= s1 <= d or not 0 <= s2 <= self.prefix[i - 1] or not 0 <= j <= self.k:
            return INF
        if i == 1:
            return swap_dp_base(d, c, s1, j) if s2 == 0 else INF
        slack = min(j - d + s1, self.k)
        if slack < 0 or self.prefix[i - 1] - s2 > slack:
            return INF
        prev = self._prefix_best(i - 1, s2)
        return prev + s1 * c if prev < INF else INF

    def min_cost(self) -> float:
        """``min_{s1, s2} T[n, s1, s2, k]``."""
        if self.n == 0:
            return 0.0
        return float(self._best[self.n].min())

    def allocation(self) -> tuple[int, ...]:
        """Swap counts per ranking for one minimum-cost table path."""
        if self.n == 0:
            return ()
        best = self._best[self.n]
        t = self._lo[self.n] + int(np.argmin(best))
        counts = [0] * self.n
        for i in range(self.n, 0, -1):
            s1 = int(self._arg[i][t - self._lo[i]])
            counts[i - 1] = s1
            t -= s1
        return tuple(counts)


def literal_swap_table(distances: Sequence[int], costs: Sequence[int], k: int) -> dict:
    """Dense table filled by evaluating the recurrence term by term.

    Returns ``{(i, s1, s2, j): value}`` over the full index box; meant for
    tiny instances only.
    """
    n = len(distances)
    prefix = [0]
    for d in distances:
        prefix.append(prefix[-1] + d)
    table = {}
    for i in range(1, n + 1):
        d, c = distances[i - 1], costs[i - 1]
        for s1, s2, j in product(range(d + 1), range(prefix[i - 1] + 1), range(k + 1)):
            if i == 1:
                table[i, s1, s2, j] = swap_dp_base(d, c, s1, j) if s2 == 0 else INF
                continue
            jp = min(j - d + s1, k)
            val = INF
            if jp >= 0:
                for a in range(s2 + 1):
                    val = min(val, table.get((i - 1, a, s2 - a, jp), INF))
            table[i, s1, s2, j] = val + s1 * c if val < INF else INF
    return table


def swap_script(r: Ranking, x: Ranking, swaps: int) -> tuple[int, ...]:
    """Positions of ``swaps`` successive leftmost admissible swaps on ``r``."""
    order = list(r.order)
    xpos = x.index_map()
    script = []
    p = 0
    for _ in range(swaps):
        # positions left of the last swap minus one are untouched by it
        p = max(p - 1, 0)
        while p < len(order) - 1 and xpos[order[p]] < xpos[order[p + 1]]:
            p += 1
        if p >= len(order) - 1:
            raise ValueError("no admissible disagreement left; swap count exceeds distance")
        order[p], order[p + 1] = order[p + 1], order[p]
        script.append(p + 1)
    return tuple(script)


def solve_swap_bribery(instance: ManipulationInstance) -> SwapResult:
    instance.require_complete()
    x = instance.target
    dists = [kendall_tau(x, r) for r in instance.profile]
    costs = instance.cost("per-swap").values
    table = SwapDPTable(dists, costs, instance.k)
    best = table.min_cost()
    # total distance can always be driven to zero, so best is finite
    min_cost = int(best)
    alloc = table.allocation()
    if min_cost > instance.budget:
        return SwapResult(False, min_cost, None, alloc)
    scripts = tuple(swap_script(r, x, s) for r, s in zip(instance.profile, alloc))
    witness = SwapWitness(alloc, sum(s * c for s, c in zip(alloc, costs)), scripts)
    return SwapResult(True, min_cost, witness, alloc)


def greedy_swap_oracle(instance: ManipulationInstance) -> int:
    """Minimum swap cost by buying the required distance drop from the
    cheapest rankings first; each admissible swap buys exactly one unit."""
    instance.require_complete()
    x = instance.target
    dists = [kendall_tau(x, r) for r in instance.profile]
    need = max(sum(dists) - instance.k, 0)
    total = 0
    for i in sorted(range(instance.n), key=lambda i: (instance.ranking_costs[i], i)):
        if need == 0:
            break
        take = min(need, dists[i])
        total += take * instance.ranking_costs[i]
        need -= take
    return total


def verify_swap_witness(instance: ManipulationInstance, witness: SwapWitness) -> bool:
    """Replay every script, checking each swap is admissible when executed."""
    x = instance.target
    if len(witness.swap_script) != instance.n:
        return False
    cost = 0
    total = 0
    for i, (r, script) in enumerate(zip(instance.profile, witness.swap_script)):
        cur = r
        for p in script:
            if not 1 <= p < len(cur):
                return False
            a, b = cur.at(p), cur.at(p + 1)
            if x.position(a) < x.position(b):
                return False
            order = list(cur.order)
            order[p - 1], order[p] = b, a
            cur = Ranking(order)
        cost += len(script) * instance.ranking_costs[i]
        total += kendall_tau(x, cur)
    return cost <= instance.budget and cost == witness.total_cost and total <= instance.k


def leftmost_script_reference(r: Ranking, x: Ranking, swaps: int) -> tuple[int, ...]:
    """Unoptimised script builder used to cross-check :func:`swap_script`."""
    out = []
    for _ in range(swaps):
        p = find_admissible_disagreement(r, x)
        if p is None:
            raise ValueError("no admissible disagreement left")
        out.append(p)
        r = apply_adjacent_swap(r, p)
    return tuple(out)
