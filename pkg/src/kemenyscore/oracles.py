"""Exhaustive reference solvers.

Each oracle enumerates the raw search space of its problem and shares no
code with the solver it checks, apart from the pairwise Kendall tau scan.
They refuse to run past an :class:`OracleBudget`.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Callable, Iterable

from .core import InstanceTooLargeError, ManipulationInstance, Ranking, kendall_tau

ENV_CAP = "KEMENY_ORACLE_CAP"


@dataclass(frozen=True)
class OracleBudget:
    """Size limits for the exhaustive solvers.

    ``max_total_enumeration`` bounds every oracle.  The per-dimension caps
    only apply where an oracle enumerates orderings or subsets of
    candidates (the extension and deletion scans).  The bribe-subset and
    swap-allocation scans are bounded by their state count alone.
    """

    max_candidates: int = 6
    max_rankings: int = 5
    max_total_enumeration: int = 10**7

    @classmethod
    def from_env(cls, **overrides) -> "OracleBudget":
        cap = os.environ.get(ENV_CAP)
        if cap is not None and "max_total_enumeration" not in overrides:
            overrides["max_total_enumeration"] = int(cap)
        return cls(**overrides)

    def check(
        self,
        instance: ManipulationInstance,
        states: int,
        *,
        what: str,
        dims: tuple[str, ...] = ("m", "n"),
    ) -> None:
        if "m" in dims and instance.m > self.max_candidates:
            raise InstanceTooLargeError(
                f"{what}: {instance.m} candidates exceed the cap of {self.max_candidates}"
            )
        if "n" in dims and instance.n > self.max_rankings:
            raise InstanceTooLargeError(
                f"{what}: {instance.n} rankings exceed the cap of {self.max_rankings}"
            )
        if states > self.max_total_enumeration:
            raise InstanceTooLargeError(
                f"{what}: {states} states exceed the cap of {self.max_total_enumeration}"
            )


@dataclass(frozen=True)
class OracleResult:
    optimum: int
    witness: object


def _certify(options: list[tuple[int, object]], accept: Callable[[object], bool]) -> OracleResult:
    """Minimum cost over accepted options, re-checked as a feasibility
    frontier: some option costing at most the minimum is accepted, and none
    costing one less is."""
    feasible = [(v, w) for v, w in options if accept(w)]
    if not feasible:  # pragma: no cover - every problem here has a full repair
        raise AssertionError("oracle found no feasible option")
    best = min(feasible, key=lambda vw: vw[0])

    def decide(b: int) -> bool:
        return any(v <= b and accept(w) for v, w in options)

    if not decide(best[0]) or decide(best[0] - 1):  # pragma: no cover
        raise AssertionError("oracle frontier check failed")
    return OracleResult(best[0], best[1])


def extensions(r: Ranking, candidates: Iterable[int]) -> Iterable[Ranking]:
    """Every complete ranking over ``candidates`` whose restriction to the
    support of ``r`` is ``r``: all orderings of the missing candidates, placed
    into all slot choices."""
    candidates = list(candidates)
    missing = [c for c in candidates if c not in r.support]
    m = len(candidates)
    fixed = list(r.order)
    for slots in combinations(range(m), len(missing)):
        for perm in permutations(missing):
            out = [None] * m
            for pos, c in zip(slots, perm):
                out[pos] = c
            it = iter(fixed)
            yield Ranking(c if c is not None else next(it) for c in out)


def oracle_pks(instance: ManipulationInstance, budget: OracleBudget | None = None) -> OracleResult:
    """Minimum total distance over all extensions of every partial ranking."""
    budget = budget or OracleBudget.from_env()
    m = instance.m
    states = sum(math.factorial(m) // math.factorial(len(r)) for r in instance.profile)
    budget.check(instance, states, what="oracle_pks", dims=("m",))
    x = instance.target
    best_total = 0
    witness = []
    for r in instance.profile:
        best = min(extensions(r, range(m)), key=lambda e: (kendall_tau(x, e), e.order))
        best_total += kendall_tau(x, best)
        witness.append(best)
    return OracleResult(best_total, tuple(witness))


def oracle_dollar(instance: ManipulationInstance, budget: OracleBudget | None = None) -> OracleResult:
    """Cheapest set of rankings to rewrite to the target (or delete)."""
    budget = budget or OracleBudget.from_env()
    n = instance.n
    budget.check(instance, 2**n, what="oracle_dollar", dims=())
    x = instance.target
    d = [kendall_tau(x, r) for r in instance.profile]
    costs = instance.ranking_costs
    options = []
    for size in range(n + 1):
        for subset in combinations(range(n), size):
            options.append((sum(costs[i] for i in subset), subset))

    def accept(subset):
        return sum(d[i] for i in range(n) if i not in subset) <= instance.k

    return _certify(options, accept)


def oracle_swap(instance: ManipulationInstance, budget: OracleBudget | None = None) -> OracleResult:
    """Cheapest swap-count allocation ``s_i <= d_i`` bringing the total within k."""
    budget = budget or OracleBudget.from_env()
    x = instance.target
    d = [kendall_tau(x, r) for r in instance.profile]
    states = math.prod(di + 1 for di in d)
    budget.check(instance, states, what="oracle_swap", dims=())
    costs = instance.ranking_costs
    total = sum(d)
    options = [
        (sum(s * c for s, c in zip(alloc, costs)), alloc)
        for alloc in product(*(range(di + 1) for di in d))
    ]
    return _certify(options, lambda alloc: total - sum(alloc) <= instance.k)


def oracle_candidate_deletion(
    instance: ManipulationInstance, budget: OracleBudget | None = None
) -> OracleResult:
    """Cheapest candidate set whose removal brings the total distance within k."""
    budget = budget or OracleBudget.from_env()
    m = instance.m
    budget.check(
        instance, 2**m * max(instance.n, 1), what="oracle_candidate_deletion", dims=("m",)
    )
    costs = instance.candidate_costs
    options = []
    for size in range(m + 1):
        for subset in combinations(range(m), size):
            options.append((sum(costs[c] for c in subset), subset))

    def accept(subset):
        drop = set(subset)
        x = Ranking(c for c in instance.target.order if c not in drop)
        rest = (Ranking(c for c in r.order if c not in drop) for r in instance.profile)
        return sum(kendall_tau(x, r) for r in rest) <= instance.k

    return _certify(options, accept)
