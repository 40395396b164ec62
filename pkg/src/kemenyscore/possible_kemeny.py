"""Optimal extension of partial rankings toward a target, and the decision
procedure for Possible Kemeny Score built on it."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Collection

from .core import (
    DuplicateCandidateError,
    ManipulationInstance,
    Ranking,
    UnknownCandidateError,
    kendall_tau,
)


@dataclass(frozen=True)
class ExtensionResult:
    extended: Ranking
    distance: int
    # (candidate, chosen block index q) in insertion order
    insert_trace: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class PKSResult:
    decision: bool
    distance: int
    extensions: tuple[ExtensionResult, ...]

    @property
    def witness(self) -> tuple[Ranking, ...]:
        return tuple(e.extended for e in self.extensions)


def _slot_index(order: list[int], fixed: Collection[int], j: int) -> int:
    """List index where ``ins(., c, j)`` places a new candidate."""
    seen = 0
    for idx, c in enumerate(order):
        if c in fixed:
            if seen == j:
                return idx
            seen += 1
    if j == seen:
        return len(order)
    raise IndexError(f"block index {j} outside 0..{seen}")


def insert_after_block(rp: Ranking, c: int, j: int, fixed: Collection[int]) -> Ranking:
    """Insert ``c`` after the ``j``-th candidate of ``fixed`` and after every
    non-fixed candidate already sitting between it and the next fixed one.

    ``fixed`` is the support of the original partial ranking; ``j = 0`` puts
    ``c`` just before the first fixed candidate and ``j = len(fixed)`` appends.
    """
    if c in rp:
        raise DuplicateCandidateError(f"candidate {c} already ranked")
    fixed = frozenset(fixed)
    if not 0 <= j <= len(fixed):
        raise IndexError(f"block index {j} outside 0..{len(fixed)}")
    order = list(rp.order)
    order.insert(_slot_index(order, fixed, j), c)
    return Ranking(order)


def _insertion_cost(order: list[int], idx: int, xc: int, xpos: dict[int, int]) -> int:
    # disagreements created by putting a candidate with target index xc at idx
    before = sum(1 for y in order[:idx] if xpos[y] > xc)
    after = sum(1 for y in order[idx:] if xpos[y] < xc)
    return before + after


def optimal_extension(x: Ranking, r: Ranking) -> ExtensionResult:
    """Extend partial ranking ``r`` to all candidates of ``x`` at minimum
    Kendall tau distance from ``x``.

    Missing candidates are inserted in target order, each at the leftmost
    block index minimising the distance that is not before the previous
    insertion's index.  Only the marginal disagreements of the inserted
    candidate are evaluated, O(m) per tried index.
    """
    if not r.support <= x.support:
        raise UnknownCandidateError("partial ranking uses candidates outside the target")
    fixed = r.support
    xpos = x.index_map()
    order = list(r.order)
    distance = kendall_tau(x, r)
    lo = 0
    trace = []
    for c in x.order:
        if c in fixed:
            continue
        xc = xpos[c]
        anchors = [idx for idx, y in enumerate(order) if y in fixed] + [len(order)]
        best_cost, best_q = None, lo
        for j in range(lo, len(fixed) + 1):
            cost = _insertion_cost(order, anchors[j], xc, xpos)
            if best_cost is None or cost < best_cost:
                best_cost, best_q = cost, j
        order.insert(anchors[best_q], c)
        distance += best_cost
        trace.append((c, best_q))
        lo = best_q
    return ExtensionResult(Ranking(order), distance, tuple(trace))


def solve_pks(instance: ManipulationInstance) -> PKSResult:
    """Extend every profile ranking independently and compare the total to k."""
    extensions = tuple(optimal_extension(instance.target, r) for r in instance.profile)
    total = sum(e.distance for e in extensions)
    return PKSResult(total <= instance.k, total, extensions)


def verify_pks_witness(instance: ManipulationInstance, extended: tuple[Ranking, ...]) -> bool:
    """Each ranking must be a complete extension of its source and the total
    distance must be within k."""
    if len(extended) != instance.n:
        return False
    for src, ext in zip(instance.profile, extended):
        if not ext.is_complete(instance.m):
            return False
        if Ranking(c for c in ext.order if c in src.support) != src:
            return False
    return sum(kendall_tau(instance.target, e) for e in extended) <= instance.k
