"""Instance file format and random profile generation.

The format is line oriented; ``#`` starts a comment and blank lines are
ignored::

    candidates: a b c
    X: a c b
    k: 3
    budget: 1
    ranking-costs: 1 1 1 1 1 1
    candidate-costs: a=1 b=1 c=1
    R: a b c
    R: c b a

``ranking-costs`` and ``candidate-costs`` are optional and default to 1.
A ranking that omits candidates is partial.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

from .core import KemenyError, ManipulationInstance, Ranking

_SCALAR_KEYS = ("k", "budget")
_KEYS = ("candidates", "X", "k", "budget", "ranking-costs", "candidate-costs", "R")


class InstanceParseError(KemenyError, ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class InstanceSyntaxError(InstanceParseError):
    pass


class InstanceSemanticError(InstanceParseError):
    def __init__(self, constraint: str, message: str, line: int | None = None, column: int | None = None):
        self.constraint = constraint
        super().__init__(f"[{constraint}] {message}", line, column)


@dataclass(frozen=True)
class InstanceFile:
    instance: ManipulationInstance
    action: str | None = None


def _tokens(body: str, offset: int) -> list[tuple[str, int]]:
    out = []
    col = offset
    for part in body.split(" "):
        if part:
            out.append((part, col + 1))
        col += len(part) + 1
    return out


def _parse_int(tok: str, lineno: int, col: int, what: str) -> int:
    try:
        value = int(tok)
    except ValueError:
        raise InstanceSyntaxError(f"expected an integer for {what}, got {tok!r}", lineno, col) from None
    if value < 0:
        raise InstanceSemanticError("non-negative", f"{what} must be non-negative", lineno, col)
    return value


def _parse_order(toks, index, lineno, what, complete):
    seen = set()
    order = []
    for tok, col in toks:
        if tok not in index:
            raise InstanceSemanticError("known-candidate", f"unknown candidate {tok!r} in {what}", lineno, col)
        if tok in seen:
            raise InstanceSemanticError("duplicate-candidate", f"candidate {tok!r} repeated in {what}", lineno, col)
        seen.add(tok)
        order.append(index[tok])
    if complete and len(order) != len(index):
        missing = sorted(set(index) - seen)
        raise InstanceSemanticError("complete-ranking", f"{what} must rank every candidate; missing {missing}", lineno)
    return Ranking(order)


def parse_instance(text: str) -> InstanceFile:
    """Parse and validate an instance file; errors carry line numbers."""
    entries: list[tuple[str, list[tuple[str, int]], int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].replace("\t", " ").rstrip()
        if not line.strip():
            continue
        if ":" not in line:
            raise InstanceSyntaxError("expected 'key: values'", lineno, 1)
        key, body = line.split(":", 1)
        key = key.strip()
        if key not in _KEYS:
            raise InstanceSyntaxError(f"unknown key {key!r}; expected one of {', '.join(_KEYS)}", lineno, 1)
        entries.append((key, _tokens(body, len(line) - len(body)), lineno))

    singles: dict[str, tuple[list, int]] = {}
    rankings = []
    for key, toks, lineno in entries:
        if key == "R":
            rankings.append((toks, lineno))
        elif key in singles:
            raise InstanceSemanticError("unique-key", f"{key!r} given twice", lineno)
        else:
            singles[key] = (toks, lineno)

    if "candidates" not in singles:
        raise InstanceSemanticError("required-key", "missing 'candidates:' line")
    ctoks, cline = singles["candidates"]
    labels = []
    for tok, col in ctoks:
        if "=" in tok or ":" in tok:
            raise InstanceSyntaxError(f"candidate label {tok!r} may not contain '=' or ':'", cline, col)
        if tok in labels:
            raise InstanceSemanticError("duplicate-candidate", f"candidate {tok!r} listed twice", cline, col)
        labels.append(tok)
    index = {lab: i for i, lab in enumerate(labels)}

    if "X" not in singles:
        raise InstanceSemanticError("required-key", "missing 'X:' line")
    xtoks, xline = singles["X"]
    target = _parse_order(xtoks, index, xline, "X", complete=True)

    scalars = {}
    for key in _SCALAR_KEYS:
        if key not in singles:
            raise InstanceSemanticError("required-key", f"missing '{key}:' line")
        toks, lineno = singles[key]
        if len(toks) != 1:
            raise InstanceSyntaxError(f"expected exactly one integer after '{key}:'", lineno)
        scalars[key] = _parse_int(toks[0][0], lineno, toks[0][1], key)

    profile = tuple(
        _parse_order(toks, index, lineno, f"ranking {i + 1}", complete=False)
        for i, (toks, lineno) in enumerate(rankings)
    )

    ranking_costs = None
    if "ranking-costs" in singles:
        toks, lineno = singles["ranking-costs"]
        if len(toks) != len(profile):
            raise InstanceSemanticError(
                "aligned-costs", f"{len(toks)} ranking costs for {len(profile)} rankings", lineno
            )
        ranking_costs = tuple(_parse_int(t, lineno, c, "ranking cost") for t, c in toks)

    candidate_costs = None
    if "candidate-costs" in singles:
        toks, lineno = singles["candidate-costs"]
        costs = {}
        for tok, col in toks:
            if tok.count("=") != 1:
                raise InstanceSyntaxError(f"expected label=cost, got {tok!r}", lineno, col)
            lab, val = tok.split("=")
            if lab not in index:
                raise InstanceSemanticError("known-candidate", f"unknown candidate {lab!r}", lineno, col)
            if lab in costs:
                raise InstanceSemanticError("duplicate-candidate", f"cost for {lab!r} given twice", lineno, col)
            costs[lab] = _parse_int(val, lineno, col + len(lab) + 1, f"cost of {lab}")
        candidate_costs = tuple(costs.get(lab, 1) for lab in labels)

    inst = ManipulationInstance(
        labels=tuple(labels),
        target=target,
        profile=profile,
        k=scalars["k"],
        budget=scalars["budget"],
        ranking_costs=ranking_costs,
        candidate_costs=candidate_costs,
    )
    return InstanceFile(inst)


def render_instance(instance: ManipulationInstance) -> str:
    """Canonical text form; ``parse_instance(render_instance(i)).instance == i``."""
    lab = instance.labels

    def names(r: Ranking) -> str:
        return " ".join(lab[c] for c in r.order)

    lines = [
        "candidates: " + " ".join(lab),
        "X: " + names(instance.target),
        f"k: {instance.k}",
        f"budget: {instance.budget}",
    ]
    if instance.n:
        lines.append("ranking-costs: " + " ".join(map(str, instance.ranking_costs)))
    lines.append(
        "candidate-costs: " + " ".join(f"{l}={c}" for l, c in zip(lab, instance.candidate_costs))
    )
    lines.extend("R: " + names(r) for r in instance.profile)
    return "\n".join(lines) + "\n"


def instance_digest(instance: ManipulationInstance) -> str:
    return hashlib.sha256(render_instance(instance).encode()).hexdigest()


def _mallows_ranking(reference: tuple[int, ...], phi: float, rng: np.random.Generator) -> Ranking:
    # repeated insertion: the i-th reference item lands j slots above the
    # bottom with probability proportional to phi**j
    order: list[int] = []
    for i, c in enumerate(reference):
        if i == 0:
            j = 0
        else:
            w = phi ** np.arange(i + 1)
            j = int(rng.choice(i + 1, p=w / w.sum()))
        order.insert(len(order) - j, c)
    return Ranking(order)


def generate_profile(
    m: int,
    n: int,
    model: str = "uniform",
    *,
    phi: float = 1.0,
    reference: tuple[int, ...] | None = None,
    seed: int | None = None,
) -> tuple[Ranking, ...]:
    """Sample ``n`` complete rankings over ``m`` candidates.

    ``model`` is ``"uniform"`` or ``"mallows"`` (dispersion ``phi`` around
    ``reference``, identity by default); ``phi = 1`` is uniform.
    """
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    rng = np.random.default_rng(seed)
    if model == "uniform":
        return tuple(Ranking(rng.permutation(m).tolist()) for _ in range(n))
    if model != "mallows":
        raise ValueError(f"unknown model {model!r}")
    if not 0 < phi <= 1:
        raise ValueError("phi must lie in (0, 1]")
    reference = tuple(range(m)) if reference is None else tuple(reference)
    if sorted(reference) != list(range(m)):
        raise ValueError("reference must be a permutation of the candidates")
    return tuple(_mallows_ranking(reference, phi, rng) for _ in range(n))
