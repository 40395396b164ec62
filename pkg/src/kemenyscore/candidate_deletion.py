"""Candidate deletion: the k = 0 case through heaviest common increasing
subsequences of permutations, and the single-ranking case through weighted
partial vertex cover on permutation graphs.

Naming: ``m`` is the number of candidates (= permutation length) and ``p``
the number of sequences.  Permutation values are 1-based, like target
positions: ``f(X(i)) = i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import (
    InstanceTooLargeError,
    MalformedInstanceError,
    ManipulationInstance,
    Ranking,
    UnsupportedParameterError,
    kendall_tau,
    restrict,
)

WPVC_VERTEX_CAP = 20


@dataclass(frozen=True)
class HCISInstance:
    sequences: tuple[tuple[int, ...], ...]
    weights: tuple[int, ...]  # weights[v - 1] is the weight of value v
    target: int

    @property
    def m(self) -> int:
        return len(self.weights)

    def weight(self, v: int) -> int:
        return self.weights[v - 1]


@dataclass(frozen=True)
class Match:
    value: int
    positions: tuple[int, ...]  # 1-based position of ``value`` in each sequence
    rank: int

    def dominates(self, other: "Match") -> bool:
        return self.value < other.value and all(
            a < b for a, b in zip(self.positions, other.positions)
        )


@dataclass(frozen=True)
class HCISSolution:
    weight: int
    sequence: tuple[int, ...]
    matches: tuple[Match, ...]


@dataclass(frozen=True)
class PermutationGraph:
    permutation: tuple[int, ...]
    vertex_weights: tuple[int, ...]  # vertex_weights[v - 1] for vertex v
    edges: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return len(self.permutation)


@dataclass(frozen=True)
class WPVCInstance:
    graph: PermutationGraph
    budget: int
    t: int

    def __post_init__(self):
        if not 0 <= self.t <= len(self.graph.edges):
            raise ValueError(f"coverage target {self.t} outside 0..{len(self.graph.edges)}")


@dataclass(frozen=True)
class WPVCResult:
    decision: bool
    min_weight: int  # lightest vertex set covering at least t edges
    witness: tuple[int, ...] | None


@dataclass(frozen=True)
class DeletionResult:
    decision: bool
    optimum: int  # minimum deletion cost reaching distance <= k
    witness: tuple[int, ...] | None  # deleted candidate ids
    cost: int | None
    residual_distance: int | None


def _check_permutation(seq: Sequence[int], m: int) -> None:
    if len(seq) != m or sorted(seq) != list(range(1, m + 1)):
        raise MalformedInstanceError(f"{tuple(seq)} is not a permutation of 1..{m}")


def target_index_map(x: Ranking) -> dict[int, int]:
    """``f`` with ``f(X(i)) = i``."""
    return {c: i + 1 for i, c in enumerate(x.order)}


def reduce_cd_to_hcis(instance: ManipulationInstance) -> HCISInstance:
    if instance.k != 0:
        raise UnsupportedParameterError("the HCIS reduction needs k = 0")
    instance.require_complete()
    f = target_index_map(instance.target)
    costs = instance.candidate_costs
    seqs = tuple(tuple(f[c] for c in r.order) for r in instance.profile)
    weights = tuple(costs[c] for c in instance.target.order)
    return HCISInstance(seqs, weights, sum(costs) - instance.budget)


def solve_hcis(hcis: HCISInstance) -> HCISSolution:
    """Heaviest common increasing subsequence of permutations.

    Matches are ranked in increasing value order; the rank of a match is its
    weight plus the best rank among the matches dominating it (smaller value,
    earlier in every sequence).  The dominance test is a plain scan over all
    smaller values.
    """
    m = hcis.m
    for seq in hcis.sequences:
        _check_permutation(seq, m)
    if m == 0:
        return HCISSolution(0, (), ())
    p = len(hcis.sequences)
    pos = np.zeros((m, p), dtype=np.int64)
    for s, seq in enumerate(hcis.sequences):
        for idx, v in enumerate(seq):
            pos[v - 1, s] = idx + 1
    w = np.asarray(hcis.weights, dtype=np.int64)
    rank = np.zeros(m, dtype=np.int64)
    pred = np.full(m, -1, dtype=np.int64)
    for j in range(m):
        dom = np.flatnonzero((pos[:j] < pos[j]).all(axis=1))
        if dom.size:
            best = dom[np.argmax(rank[dom])]
            rank[j] = w[j] + rank[best]
            pred[j] = best
        else:
            rank[j] = w[j]
    end = int(np.argmax(rank))
    seq = []
    while end >= 0:
        seq.append(end + 1)
        end = int(pred[end])
    matches = tuple(
        Match(v + 1, tuple(int(q) for q in pos[v]), int(rank[v])) for v in range(m)
    )
    return HCISSolution(max(int(rank.max()), 0), tuple(reversed(seq)), matches)


def solve_cd_k0(instance: ManipulationInstance) -> DeletionResult:
    """Cheapest candidate deletion making every ranking agree with the target."""
    hcis = reduce_cd_to_hcis(instance)
    sol = solve_hcis(hcis)
    total = sum(instance.candidate_costs)
    optimum = total - sol.weight
    if sol.weight < hcis.target:
        return DeletionResult(False, optimum, None, None, None)
    kept = {instance.target.at(v) for v in sol.sequence}
    deleted = tuple(c for c in range(instance.m) if c not in kept)
    cost = sum(instance.candidate_costs[c] for c in deleted)
    return DeletionResult(True, optimum, deleted, cost, 0)


def build_permutation_graph(perm: Sequence[int], weights: Sequence[int] | None = None) -> PermutationGraph:
    """Vertices ``1..n``; ``{x, y}`` is an edge when the permutation reverses them."""
    perm = tuple(int(v) for v in perm)
    n = len(perm)
    _check_permutation(perm, n)
    weights = (1,) * n if weights is None else tuple(weights)
    if len(weights) != n:
        raise ValueError("one weight per vertex is required")
    where = {v: i for i, v in enumerate(perm)}
    edges = tuple(
        (x, y) for x in range(1, n + 1) for y in range(x + 1, n + 1) if where[x] > where[y]
    )
    return PermutationGraph(perm, weights, edges)


def reduce_wpvc_to_cd(wpvc: WPVCInstance) -> ManipulationInstance:
    """Candidates are the vertices ``1..n`` (ids ``0..n-1``); the target is the
    identity order and the single ranking is the realising permutation."""
    g = wpvc.graph
    labels = tuple(str(v) for v in range(1, g.n + 1))
    return ManipulationInstance(
        labels=labels,
        target=Ranking(range(g.n)),
        profile=(Ranking(v - 1 for v in g.permutation),),
        k=len(g.edges) - wpvc.t,
        budget=wpvc.budget,
        candidate_costs=g.vertex_weights,
    )


def reduce_cd_to_wpvc(instance: ManipulationInstance) -> WPVCInstance:
    if instance.n != 1:
        raise UnsupportedParameterError("the WPVC reduction needs exactly one ranking")
    instance.require_complete()
    f = target_index_map(instance.target)
    perm = tuple(f[c] for c in instance.profile[0].order)
    weights = tuple(instance.candidate_costs[c] for c in instance.target.order)
    g = build_permutation_graph(perm, weights)
    return WPVCInstance(g, instance.budget, max(len(g.edges) - instance.k, 0))


def _lex_smallest(feasible: np.ndarray, n: int) -> tuple[int, ...]:
    # greedy over sorted vertex tuples; a proper prefix beats its extensions
    chosen: list[int] = []
    prefix_bits = 0
    last = -1
    while True:
        if np.any(feasible == prefix_bits):
            return tuple(v + 1 for v in chosen)
        for v in range(last + 1, n):
            low = (1 << (v + 1)) - 1
            want = prefix_bits | (1 << v)
            if np.any((feasible & low) == want):
                chosen.append(v)
                prefix_bits = want
                last = v
                break
        else:  # pragma: no cover - feasible is non-empty
            raise AssertionError("no feasible extension")


def solve_wpvc_bruteforce(wpvc: WPVCInstance, cap: int = WPVC_VERTEX_CAP) -> WPVCResult:
    """Scan every vertex subset; the witness is the lexicographically smallest
    feasible set of vertices."""
    g = wpvc.graph
    n = g.n
    if n > cap:
        raise InstanceTooLargeError(f"{n} vertices exceed the brute-force cap of {cap}")
    masks = np.arange(1 << n, dtype=np.int64)
    weight = np.zeros(1 << n, dtype=np.int64)
    for v in range(n):
        weight += ((masks >> v) & 1) * g.vertex_weights[v]
    covered = np.zeros(1 << n, dtype=np.int64)
    for x, y in g.edges:
        covered += ((masks >> (x - 1)) | (masks >> (y - 1))) & 1
    covering = covered >= wpvc.t
    min_weight = int(weight[covering].min())
    feasible = masks[covering & (weight <= wpvc.budget)]
    if feasible.size == 0:
        return WPVCResult(False, min_weight, None)
    return WPVCResult(True, min_weight, _lex_smallest(feasible, n))


def solve_cd_single_ranking(instance: ManipulationInstance, cap: int = WPVC_VERTEX_CAP) -> DeletionResult:
    wpvc = reduce_cd_to_wpvc(instance)
    res = solve_wpvc_bruteforce(wpvc, cap=cap)
    if not res.decision:
        return DeletionResult(False, res.min_weight, None, None, None)
    deleted = tuple(sorted(instance.target.at(v) for v in res.witness))
    keep = set(range(instance.m)) - set(deleted)
    residual = kendall_tau(restrict(instance.target, keep), restrict(instance.profile[0], keep))
    cost = sum(instance.candidate_costs[c] for c in deleted)
    return DeletionResult(True, res.min_weight, deleted, cost, residual)


def verify_deletion_set(instance: ManipulationInstance, deleted) -> bool:
    """Cost within budget and the restricted profile within distance k."""
    deleted = set(deleted)
    if not deleted <= set(range(instance.m)):
        return False
    if sum(instance.candidate_costs[c] for c in deleted) > instance.budget:
        return False
    keep = set(range(instance.m)) - deleted
    x = restrict(instance.target, keep)
    total = sum(kendall_tau(x, restrict(r, keep & r.support)) for r in instance.profile)
    return total <= instance.k


def verify_cover(wpvc: WPVCInstance, vertices) -> bool:
    vs = set(vertices)
    g = wpvc.graph
    if not vs <= set(range(1, g.n + 1)):
        return False
    if sum(g.vertex_weights[v - 1] for v in vs) > wpvc.budget:
        return False
    return sum(1 for x, y in g.edges if x in vs or y in vs) >= wpvc.t
