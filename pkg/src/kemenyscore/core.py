"""Rankings, profiles and Kendall tau machinery shared by every solver.

Candidates are dense integer ids ``0..m-1``; labels only appear at the I/O
boundary (see :mod:`kemenyscore.io`).  Position arguments and return values
are 1-based, so ``ranking.at(1)`` is the most preferred candidate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Collection, Iterable, Iterator, Sequence

import numpy as np


class KemenyError(Exception):
    """Base class for errors raised by this package."""


class UnknownCandidateError(KemenyError, ValueError):
    pass


class DuplicateCandidateError(KemenyError, ValueError):
    pass


class UnsupportedParameterError(KemenyError, ValueError):
    """The instance lies outside the case a solver handles (e.g. k != 0)."""


class MalformedInstanceError(KemenyError, ValueError):
    pass


class InstanceTooLargeError(KemenyError, RuntimeError):
    """An exhaustive routine refused to run beyond its enumeration cap."""


class Ranking:
    """A strict total order over a subset of candidate ids.

    Immutable; ``order[0]`` is the top candidate.
    """

    __slots__ = ("_order", "_pos", "_support")

    def __init__(self, order: Iterable[int]):
        order = tuple(int(c) for c in order)
        pos = {c: i for i, c in enumerate(order)}
        if len(pos) != len(order):
            seen = set()
            dup = next(c for c in order if c in seen or seen.add(c))
            raise DuplicateCandidateError(f"candidate {dup} ranked twice")
        self._order = order
        self._pos = pos
        self._support = frozenset(order)

    @property
    def order(self) -> tuple[int, ...]:
        return self._order

    @property
    def support(self) -> frozenset[int]:
        return self._support

    def at(self, i: int) -> int:
        """Candidate at 1-based position ``i``."""
        if not 1 <= i <= len(self._order):
            raise IndexError(f"position {i} outside 1..{len(self._order)}")
        return self._order[i - 1]

    def position(self, c: int) -> int:
        """1-based position of candidate ``c``."""
        try:
            return self._pos[c] + 1
        except KeyError:
            raise UnknownCandidateError(f"candidate {c} is not ranked") from None

    def index_map(self) -> dict[int, int]:
        """0-based position lookup table (a copy)."""
        return dict(self._pos)

    def is_complete(self, m: int) -> bool:
        return len(self._order) == m and self._support == frozenset(range(m))

    def __len__(self) -> int:
        return len(self._order)

    def __iter__(self) -> Iterator[int]:
        return iter(self._order)

    def __contains__(self, c: object) -> bool:
        return c in self._pos

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Ranking):
            return NotImplemented
        return self._order == other._order

    def __hash__(self) -> int:
        return hash(self._order)

    def __repr__(self) -> str:
        return "Ranking(" + ">".join(map(str, self._order)) + ")"


Profile = tuple[Ranking, ...]


@dataclass(frozen=True)
class Candidate:
    id: int
    label: str


COST_KINDS = ("per-ranking", "per-swap", "per-candidate")


@dataclass(frozen=True)
class CostModel:
    """Additive costs, indexed by ranking index or candidate id depending on ``kind``."""

    kind: str
    values: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in COST_KINDS:
            raise ValueError(f"unknown cost kind {self.kind!r}")
        object.__setattr__(self, "values", tuple(self.values))
        for v in self.values:
            if not isinstance(v, (int, np.integer)) or v < 0:
                raise ValueError(f"costs must be non-negative integers, got {v!r}")

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    def __len__(self) -> int:
        return len(self.values)

    def total(self, indices: Iterable[int]) -> int:
        return sum(self.values[i] for i in indices)


@dataclass(frozen=True)
class ManipulationInstance:
    """Candidates, a profile, a target ranking and the manipulation budget.

    Both cost vectors are carried so one instance can feed every action;
    ``ranking_costs`` prices $-bribery, swaps and ranking deletion, and
    ``candidate_costs`` prices candidate deletion.
    """

    labels: tuple[str, ...]
    target: Ranking
    profile: Profile
    k: int = 0
    budget: int = 0
    ranking_costs: tuple[int, ...] = field(default=None)
    candidate_costs: tuple[int, ...] = field(default=None)

    def __post_init__(self):
        labels = tuple(self.labels)
        if len(set(labels)) != len(labels):
            raise DuplicateCandidateError("candidate labels must be distinct")
        if any(not lab for lab in labels):
            raise ValueError("candidate labels must be non-empty")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "profile", tuple(self.profile))
        m, n = len(labels), len(self.profile)
        if not self.target.is_complete(m):
            raise MalformedInstanceError("target must rank every candidate exactly once")
        for i, r in enumerate(self.profile):
            if not r.support <= self.target.support:
                raise UnknownCandidateError(f"ranking {i + 1} uses an unknown candidate")
        for name in ("k", "budget"):
            if int(getattr(self, name)) < 0:
                raise ValueError(f"{name} must be non-negative")
        rc = (1,) * n if self.ranking_costs is None else tuple(self.ranking_costs)
        cc = (1,) * m if self.candidate_costs is None else tuple(self.candidate_costs)
        if len(rc) != n:
            raise MalformedInstanceError(f"expected {n} ranking costs, got {len(rc)}")
        if len(cc) != m:
            raise MalformedInstanceError(f"expected {m} candidate costs, got {len(cc)}")
        object.__setattr__(self, "ranking_costs", rc)
        object.__setattr__(self, "candidate_costs", cc)
        # validates non-negativity
        CostModel("per-ranking", rc)
        CostModel("per-candidate", cc)

    @property
    def m(self) -> int:
        return len(self.labels)

    @property
    def n(self) -> int:
        return len(self.profile)

    @property
    def candidates(self) -> tuple[Candidate, ...]:
        return tuple(Candidate(i, lab) for i, lab in enumerate(self.labels))

    def cost(self, kind: str) -> CostModel:
        if kind == "per-candidate":
            return CostModel(kind, self.candidate_costs)
        return CostModel(kind, self.ranking_costs)

    def is_complete(self) -> bool:
        return all(r.is_complete(self.m) for r in self.profile)

    def require_complete(self) -> None:
        for i, r in enumerate(self.profile):
            if not r.is_complete(self.m):
                raise MalformedInstanceError(
                    f"ranking {i + 1} is partial; this action needs complete rankings"
                )

    def ranking(self, labels: str | Sequence[str]) -> Ranking:
        """Build a ranking from labels (whitespace-separated string or sequence)."""
        return ranking_from_labels(self.labels, labels)

    def replace(self, **changes) -> "ManipulationInstance":
        fields = dict(
            labels=self.labels,
            target=self.target,
            profile=self.profile,
            k=self.k,
            budget=self.budget,
            ranking_costs=self.ranking_costs,
            candidate_costs=self.candidate_costs,
        )
        fields.update(changes)
        if "profile" in changes and "ranking_costs" not in changes:
            if len(fields["profile"]) != len(self.profile):
                fields["ranking_costs"] = None
        return ManipulationInstance(**fields)


def ranking_from_labels(labels: Sequence[str], names: str | Sequence[str]) -> Ranking:
    if isinstance(names, str):
        names = names.split()
    index = {lab: i for i, lab in enumerate(labels)}
    try:
        return Ranking(index[name] for name in names)
    except KeyError as exc:
        raise UnknownCandidateError(f"unknown candidate {exc.args[0]!r}") from None


def make_instance(
    candidates: str | Sequence[str],
    target: str | Sequence[str],
    profile: Iterable[str | Sequence[str]] = (),
    *,
    k: int = 0,
    budget: int = 0,
    ranking_costs: Sequence[int] | None = None,
    candidate_costs: Sequence[int] | dict[str, int] | None = None,
) -> ManipulationInstance:
    """Convenience constructor working on labels.

    >>> inst = make_instance("a b c", "a c b", ["a b c", "c b a"], k=3)
    >>> inst.n, inst.m
    (2, 3)
    """
    labels = tuple(candidates.split() if isinstance(candidates, str) else candidates)
    if isinstance(candidate_costs, dict):
        candidate_costs = tuple(candidate_costs.get(lab, 1) for lab in labels)
    return ManipulationInstance(
        labels=labels,
        target=ranking_from_labels(labels, target),
        profile=tuple(ranking_from_labels(labels, r) for r in profile),
        k=k,
        budget=budget,
        ranking_costs=None if ranking_costs is None else tuple(ranking_costs),
        candidate_costs=None if candidate_costs is None else tuple(candidate_costs),
    )


# --- Kendall tau -----------------------------------------------------------

_NUMPY_SCAN_MIN = 48


def count_inversions(seq: Sequence[int]) -> int:
    """Number of pairs ``i < j`` with ``seq[i] > seq[j]``, by pairwise scan."""
    n = len(seq)
    if n >= _NUMPY_SCAN_MIN:
        a = np.asarray(seq)
        return int(np.count_nonzero(np.triu(a[:, None] > a[None, :], 1)))
    inv = 0
    for i in range(n):
        si = seq[i]
        for j in range(i + 1, n):
            if si > seq[j]:
                inv += 1
    return inv


def kendall_tau(pi: Ranking, pi2: Ranking) -> int:
    """Kendall tau distance over the common support of two rankings."""
    common = pi.support & pi2.support
    pos2 = pi2._pos
    return count_inversions([pos2[c] for c in pi.order if c in common])


def distance_to_profile(pi: Ranking, profile: Iterable[Ranking]) -> int:
    return sum(kendall_tau(pi, r) for r in profile)


def restrict(pi: Ranking, keep: Collection[int]) -> Ranking:
    """``pi`` restricted to the candidates in ``keep``."""
    keep = frozenset(keep)
    if not keep <= pi.support:
        raise UnknownCandidateError(f"candidates {sorted(keep - pi.support)} not ranked")
    return Ranking(c for c in pi.order if c in keep)


def _check_common(pi: Ranking, pi2: Ranking, cands: Collection[int]) -> None:
    missing = frozenset(cands) - (pi.support & pi2.support)
    if missing:
        raise UnknownCandidateError(f"candidates {sorted(missing)} not in the common support")


def disagreements_wrt(pi: Ranking, pi2: Ranking, x: int) -> int:
    """How many candidates ``y`` are ordered differently against ``x``."""
    _check_common(pi, pi2, (x,))
    p1, p2 = pi._pos, pi2._pos
    x1, x2 = p1[x], p2[x]
    return sum(
        1
        for y in pi.support & pi2.support
        if y != x and (p1[y] < x1) != (p2[y] < x2)
    )


def agrees_over(pi: Ranking, pi2: Ranking, cands: Collection[int]) -> bool:
    _check_common(pi, pi2, cands)
    cands = frozenset(cands)
    return restrict(pi, cands) == restrict(pi2, cands)


def find_admissible_disagreement(r: Ranking, x: Ranking) -> int | None:
    """Leftmost 1-based position ``p`` where ``r(p), r(p+1)`` disagree with ``x``."""
    if r.support != x.support:
        raise UnknownCandidateError("ranking and target must rank the same candidates")
    xpos = x._pos
    order = r.order
    for p in range(len(order) - 1):
        if xpos[order[p]] > xpos[order[p + 1]]:
            return p + 1
    return None


def apply_adjacent_swap(r: Ranking, p: int) -> Ranking:
    """Exchange the candidates at 1-based positions ``p`` and ``p + 1``."""
    if not 1 <= p < len(r):
        raise IndexError(f"swap position {p} outside 1..{len(r) - 1}")
    order = list(r.order)
    order[p - 1], order[p] = order[p], order[p - 1]
    return Ranking(order)
