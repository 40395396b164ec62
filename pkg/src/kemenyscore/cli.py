"""``kemeny`` command line entry point.

    kemeny <action> <file> [--json] [--verify] [--seed N] [--cap N] [--glob PATTERN]
    kemeny gen --m M --n N [--model mallows --phi F] [--seed S]

Exit status: 0 for YES, 1 for NO, 2 for errors (in batch mode, the worst
status over all files).
"""

from __future__ import annotations

import argparse
import glob
import json
import sys
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from . import candidate_deletion as cd
from . import knapsack_bribery as kb
from . import oracles
from . import possible_kemeny as pk
from . import swap_bribery as sb
from .core import KemenyError, ManipulationInstance, Ranking, UnsupportedParameterError
from .io import generate_profile, instance_digest, parse_instance, render_instance

SOLVER_ACTIONS = ("pks", "dollar", "rdel", "swap", "cdel-k0", "cdel-single")
ORACLE_ACTIONS = ("oracle:pks", "oracle:dollar", "oracle:rdel", "oracle:swap", "oracle:cdel")
ACTIONS = SOLVER_ACTIONS + ORACLE_ACTIONS

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2


class VerificationError(KemenyError):
    pass


@dataclass
class ResultRecord:
    action: str
    decision: bool
    optimum: int | None
    witness: object
    verification: str  # "pass", "fail" or "n/a" (no witness to check)
    digest: str
    solver: str
    wall_time: float
    source: str | None = None

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def _labels(inst: ManipulationInstance, ranking: Ranking) -> list[str]:
    return [inst.labels[c] for c in ranking.order]


def _solve(action: str, inst: ManipulationInstance, cap: int | None):
    """Returns (decision, optimum, witness, verified, solver name)."""
    if action == "pks":
        res = pk.solve_pks(inst)
        wit = res.witness if res.decision else None
        ok = pk.verify_pks_witness(inst, wit) if wit is not None else None
        shown = [_labels(inst, r) for r in wit] if wit is not None else None
        return res.decision, res.distance, shown, ok, "possible_kemeny.solve_pks"
    if action in ("dollar", "rdel"):
        solver = kb.solve_dollar_bribery if action == "dollar" else kb.solve_ranking_deletion
        check = kb.verify_dollar_witness if action == "dollar" else kb.verify_deletion_witness
        res = solver(inst)
        ok = check(inst, res.witness) if res.decision else None
        shown = [i + 1 for i in res.witness] if res.decision else None
        return res.decision, res.optimum, shown, ok, f"knapsack_bribery.{solver.__name__}"
    if action == "swap":
        res = sb.solve_swap_bribery(inst)
        ok = sb.verify_swap_witness(inst, res.witness) if res.decision else None
        shown = None
        if res.decision:
            shown = {
                "swaps": list(res.witness.per_ranking_swaps),
                "cost": res.witness.total_cost,
                "script": [list(s) for s in res.witness.swap_script],
            }
        return res.decision, res.min_cost, shown, ok, "swap_bribery.solve_swap_bribery"
    if action in ("cdel-k0", "cdel-single"):
        if action == "cdel-k0":
            res, name = cd.solve_cd_k0(inst), "candidate_deletion.solve_cd_k0"
        else:
            kwargs = {} if cap is None else {"cap": cap}
            res, name = cd.solve_cd_single_ranking(inst, **kwargs), "candidate_deletion.solve_cd_single_ranking"
        ok = cd.verify_deletion_set(inst, res.witness) if res.decision else None
        shown = [inst.labels[c] for c in res.witness] if res.decision else None
        return res.decision, res.optimum, shown, ok, name

    budget = oracles.OracleBudget.from_env(
        **({} if cap is None else {"max_total_enumeration": cap})
    )
    kind = action.split(":", 1)[1]
    if kind == "pks":
        res = oracles.oracle_pks(inst, budget)
        decision = res.optimum <= inst.k
        wit = res.witness if decision else None
        ok = pk.verify_pks_witness(inst, wit) if decision else None
        shown = [_labels(inst, r) for r in wit] if decision else None
        return decision, res.optimum, shown, ok, "oracles.oracle_pks"
    inst.require_complete()
    if kind in ("dollar", "rdel"):
        res = oracles.oracle_dollar(inst, budget)
        decision = res.optimum <= inst.budget
        check = kb.verify_dollar_witness if kind == "dollar" else kb.verify_deletion_witness
        ok = check(inst, res.witness) if decision else None
        shown = [i + 1 for i in res.witness] if decision else None
        return decision, res.optimum, shown, ok, "oracles.oracle_dollar"
    if kind == "swap":
        res = oracles.oracle_swap(inst, budget)
        decision = res.optimum <= inst.budget
        ok = None
        if decision:
            scripts = tuple(
                sb.swap_script(r, inst.target, s) for r, s in zip(inst.profile, res.witness)
            )
            wit = sb.SwapWitness(tuple(res.witness), res.optimum, scripts)
            ok = sb.verify_swap_witness(inst, wit)
        shown = {"swaps": list(res.witness)} if decision else None
        return decision, res.optimum, shown, ok, "oracles.oracle_swap"
    res = oracles.oracle_candidate_deletion(inst, budget)
    decision = res.optimum <= inst.budget
    ok = cd.verify_deletion_set(inst, res.witness) if decision else None
    shown = [inst.labels[c] for c in res.witness] if decision else None
    return decision, res.optimum, shown, ok, "oracles.oracle_candidate_deletion"


def run(action: str, instance: ManipulationInstance, *, verify: bool = False, cap: int | None = None) -> ResultRecord:
    """Solve ``instance`` with ``action`` and package the outcome.

    The witness of every YES answer is re-checked against the instance
    definition; with ``verify=True`` a failed check raises.
    """
    if action not in ACTIONS:
        raise UnsupportedParameterError(f"unknown action {action!r}; choose from {', '.join(ACTIONS)}")
    if action == "cdel-k0" and instance.k != 0:
        raise UnsupportedParameterError("cdel-k0 needs k = 0 in the instance")
    if action == "cdel-single" and instance.n != 1:
        raise UnsupportedParameterError("cdel-single needs exactly one ranking")
    if action not in ("pks", "oracle:pks"):
        instance.require_complete()
    start = time.perf_counter()
    decision, optimum, witness, ok, solver = _solve(action, instance, cap)
    elapsed = time.perf_counter() - start
    status = "n/a" if ok is None else ("pass" if ok else "fail")
    if verify and status == "fail":
        raise VerificationError(f"{action}: witness failed re-verification")
    return ResultRecord(
        action=action,
        decision=bool(decision),
        optimum=None if optimum is None else int(optimum),
        witness=witness,
        verification=status,
        digest=instance_digest(instance),
        solver=solver,
        wall_time=round(elapsed, 6),
    )


def _format_human(rec: ResultRecord) -> str:
    rows = [
        ("source", rec.source or "-"),
        ("action", rec.action),
        ("decision", "YES" if rec.decision else "NO"),
        ("optimum", rec.optimum),
        ("witness", json.dumps(rec.witness)),
        ("verification", rec.verification),
        ("solver", rec.solver),
        ("wall time", f"{rec.wall_time:.4f}s"),
    ]
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k:<{width}}  {v}" for k, v in rows)


def _run_file(path: str, args) -> tuple[int, str]:
    try:
        inst = parse_instance(Path(path).read_text(encoding="utf-8")).instance
        rec = run(args.action, inst, verify=args.verify, cap=args.cap)
    except (KemenyError, OSError) as exc:
        if args.json:
            return EXIT_ERROR, json.dumps({"source": path, "action": args.action, "error": str(exc)})
        return EXIT_ERROR, f"{path}: error: {exc}"
    rec.source = path
    text = rec.to_json() if args.json else _format_human(rec)
    return (EXIT_YES if rec.decision else EXIT_NO), text


def _gen(argv: list[str]) -> int:
    p = argparse.ArgumentParser(prog="kemeny gen", description="Write a random instance file to stdout.")
    p.add_argument("--m", type=int, required=True, help="number of candidates")
    p.add_argument("--n", type=int, required=True, help="number of rankings")
    p.add_argument("--model", choices=("uniform", "mallows"), default="uniform")
    p.add_argument("--phi", type=float, default=1.0, help="Mallows dispersion in (0, 1]")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--budget", type=int, default=0)
    args = p.parse_args(argv)
    try:
        profile = generate_profile(args.m, args.n, args.model, phi=args.phi, seed=args.seed)
        labels = tuple(f"c{i + 1}" for i in range(args.m))
        inst = ManipulationInstance(
            labels=labels,
            target=Ranking(range(args.m)),
            profile=profile,
            k=args.k,
            budget=args.budget,
        )
    except (ValueError, KemenyError) as exc:
        print(f"kemeny gen: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    sys.stdout.write(render_instance(inst))
    return 0


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0] == "gen":
        return _gen(argv[1:])
    p = argparse.ArgumentParser(prog="kemeny", description="Manipulation solvers for the Kemeny score of a fixed ranking.")
    p.add_argument("action", choices=ACTIONS)
    p.add_argument("file", nargs="?", help="instance file")
    p.add_argument("--json", action="store_true", help="emit one JSON record per line")
    p.add_argument("--verify", action="store_true", help="fail (exit 2) if a witness does not re-verify")
    p.add_argument("--seed", type=int, default=None, help="accepted for symmetry with gen; solvers are deterministic")
    p.add_argument("--cap", type=int, default=None, help="enumeration cap for oracles / vertex cap for cdel-single")
    p.add_argument("--glob", default=None, help="solve every file matching the pattern")
    try:
        args = p.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else 0
    if (args.file is None) == (args.glob is None):
        print("kemeny: give exactly one of FILE or --glob", file=sys.stderr)
        return EXIT_ERROR
    paths = [args.file] if args.file else sorted(glob.glob(args.glob, recursive=True))
    if not paths:
        print(f"kemeny: no files match {args.glob!r}", file=sys.stderr)
        return EXIT_ERROR
    worst = EXIT_YES
    for path in paths:
        code, text = _run_file(path, args)
        out = sys.stderr if code == EXIT_ERROR and not args.json else sys.stdout
        print(text, file=out, flush=True)
        if not args.json and len(paths) > 1 and code != EXIT_ERROR:
            print(file=out)
        worst = max(worst, code)
    return worst


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
