import json
import random

import pytest

from _gen import SIX_VOTERS, instance
from kemenyscore import cli
from kemenyscore.core import Ranking, UnsupportedParameterError
from kemenyscore.io import (
    InstanceSemanticError,
    InstanceSyntaxError,
    generate_profile,
    instance_digest,
    parse_instance,
    render_instance,
)


@pytest.fixture
def six_voters():
    return parse_instance(SIX_VOTERS).instance


@pytest.fixture
def six_voter_file(tmp_path):
    path = tmp_path / "six_voters.txt"
    path.write_text(SIX_VOTERS)
    return path


# --- parsing ------------------------------------------------------------------


def test_parse_six_voters(six_voters):
    assert six_voters.m == 3 and six_voters.n == 6 and six_voters.k == 3 and six_voters.budget == 1
    assert [six_voters.labels[c] for c in six_voters.target.order] == ["a", "c", "b"]


def test_parse_defaults_comments_and_partial():
    inst = parse_instance(
        "# header\ncandidates: x y z\n\nX: z y x  # target\nk: 0\nbudget: 2\nR: y\nR: x z\n"
    ).instance
    assert inst.ranking_costs == (1, 1) and inst.candidate_costs == (1, 1, 1)
    assert inst.profile == (Ranking([1]), Ranking([0, 2]))
    assert not inst.is_complete()


def test_parse_empty_profile():
    inst = parse_instance("candidates: a b\nX: a b\nk: 0\nbudget: 0\n").instance
    assert inst.n == 0


def test_candidate_costs_partial_listing():
    inst = parse_instance("candidates: a b c\nX: a b c\nk: 0\nbudget: 0\ncandidate-costs: b=4\n").instance
    assert inst.candidate_costs == (1, 4, 1)


BASE = "candidates: a b c\nX: a b c\nk: 1\nbudget: 1\n"


@pytest.mark.parametrize(
    "text, constraint, line",
    [
        ("candidates: a b c\nX: a a b\nk: 1\nbudget: 1\n", "duplicate-candidate", 2),
        ("candidates: a b c\nX: a b\nk: 1\nbudget: 1\n", "complete-ranking", 2),
        (BASE + "R: a q\n", "known-candidate", 5),
        (BASE + "R: a b a\n", "duplicate-candidate", 5),
        ("candidates: a b c\nX: a b c\nk: -1\nbudget: 1\n", "non-negative", 3),
        (BASE + "ranking-costs: 1 1\nR: a b c\n", "aligned-costs", 5),
        (BASE + "ranking-costs: -2\nR: a b c\n", "non-negative", 5),
        (BASE + "candidate-costs: a=1 a=2\n", "duplicate-candidate", 5),
        (BASE + "candidate-costs: z=1\n", "known-candidate", 5),
        (BASE + "k: 2\n", "unique-key", 5),
        ("candidates: a b\nX: a b\nbudget: 1\n", "required-key", None),
        ("X: a b\nk: 0\nbudget: 1\n", "required-key", None),
        ("candidates: a a\nX: a\nk: 0\nbudget: 0\n", "duplicate-candidate", 1),
    ],
)
def test_semantic_errors(text, constraint, line):
    with pytest.raises(InstanceSemanticError) as err:
        parse_instance(text)
    assert err.value.constraint == constraint and err.value.line == line


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("candidates: a b\nX a b\n", 2, 1),
        ("candidates: a b\nvoters: 3\n", 2, 1),
        ("candidates: a b\nX: a b\nk: x\nbudget: 0\n", 3, 4),
        ("candidates: a b\nX: a b\nk: 1 2\nbudget: 0\n", 3, None),
        ("candidates: a=b c\n", 1, 13),
        ("candidates: a b\nX: a b\nk: 0\nbudget: 0\ncandidate-costs: a:1\n", 5, 18),
    ],
)
def test_syntax_errors(text, line, column):
    with pytest.raises(InstanceSyntaxError) as err:
        parse_instance(text)
    assert (err.value.line, err.value.column) == (line, column)
    assert f"line {line}" in str(err.value)


def test_round_trip_on_generated_corpus():
    rng = random.Random(2024)
    for _ in range(60):
        inst = instance(rng, rng.randint(1, 9), rng.randint(0, 6), partial_profile=rng.random() < 0.3)
        text = render_instance(inst)
        assert parse_instance(text).instance == inst
        assert render_instance(parse_instance(text).instance) == text


def test_digest_is_stable(six_voters):
    assert instance_digest(six_voters) == instance_digest(parse_instance(SIX_VOTERS).instance)
    assert instance_digest(six_voters) != instance_digest(six_voters.replace(k=2))


# --- generation ---------------------------------------------------------------


def test_generate_profile_basics():
    assert generate_profile(3, 0, seed=1) == ()
    assert generate_profile(5, 4, seed=9) == generate_profile(5, 4, seed=9)
    assert generate_profile(5, 4, "mallows", phi=0.3, seed=9) == generate_profile(
        5, 4, "mallows", phi=0.3, seed=9
    )
    prof = generate_profile(6, 20, seed=3)
    assert all(sorted(r.order) == list(range(6)) for r in prof)


def test_mallows_degenerate_phi_returns_reference():
    ref = (3, 1, 0, 2)
    prof = generate_profile(4, 30, "mallows", phi=1e-9, reference=ref, seed=0)
    assert all(r.order == ref for r in prof)


def test_mallows_concentrates_near_reference():
    from kemenyscore.core import kendall_tau

    ident = Ranking(range(7))
    tight = generate_profile(7, 200, "mallows", phi=0.2, seed=4)
    loose = generate_profile(7, 200, "mallows", phi=1.0, seed=4)
    mean = lambda prof: sum(kendall_tau(ident, r) for r in prof) / len(prof)
    assert mean(tight) < 2 < mean(loose)
    assert abs(mean(loose) - 7 * 6 / 4) < 1.0


@pytest.mark.parametrize(
    "args",
    [
        dict(m=0, n=1),
        dict(m=3, n=-1),
        dict(m=3, n=1, model="mallows", phi=0.0),
        dict(m=3, n=1, model="mallows", phi=1.5),
        dict(m=3, n=1, model="plackett"),
        dict(m=3, n=1, model="mallows", reference=(0, 0, 1)),
    ],
)
def test_generate_profile_rejects(args):
    m, n = args.pop("m"), args.pop("n")
    model = args.pop("model", "uniform")
    with pytest.raises(ValueError):
        generate_profile(m, n, model, **args)


# --- run() --------------------------------------------------------------------


def test_run_rdel_six_voters(six_voters):
    rec = cli.run("rdel", six_voters)
    assert rec.decision and rec.witness == [6] and rec.optimum == 1
    assert rec.verification == "pass" and rec.solver.startswith("knapsack_bribery")


def test_run_oracle_dollar_six_voters(six_voters):
    rec = cli.run("oracle:dollar", six_voters)
    assert rec.decision and rec.optimum == 1


def test_run_swap_reports_optimum_on_no(six_voters):
    rec = cli.run("swap", six_voters)
    assert not rec.decision and rec.optimum == 2 and rec.witness is None
    assert rec.verification == "n/a"


def test_run_mismatch_errors(six_voters):
    with pytest.raises(UnsupportedParameterError):
        cli.run("cdel-k0", six_voters)
    with pytest.raises(UnsupportedParameterError):
        cli.run("cdel-single", six_voters)
    with pytest.raises(UnsupportedParameterError):
        cli.run("bribe", six_voters)


def test_every_yes_record_verifies():
    rng = random.Random(77)
    for _ in range(40):
        inst = instance(rng, rng.randint(1, 5), rng.randint(1, 4))
        for action in ("dollar", "rdel", "swap", "pks", "oracle:swap", "oracle:cdel"):
            rec = cli.run(action, inst, verify=True)
            assert rec.verification == ("pass" if rec.decision else "n/a")


def test_solver_and_oracle_cross_check():
    rng = random.Random(5)
    pairs = [("pks", "oracle:pks"), ("dollar", "oracle:dollar"), ("rdel", "oracle:rdel"), ("swap", "oracle:swap")]
    for _ in range(40):
        inst = instance(rng, rng.randint(1, 5), rng.randint(1, 4))
        for solver, oracle in pairs:
            a, b = cli.run(solver, inst), cli.run(oracle, inst)
            assert (a.decision, a.optimum) == (b.decision, b.optimum)
        inst0 = inst.replace(k=0)
        a, b = cli.run("cdel-k0", inst0), cli.run("oracle:cdel", inst0)
        assert (a.decision, a.optimum) == (b.decision, b.optimum)
        single = inst.replace(profile=inst.profile[:1], ranking_costs=inst.ranking_costs[:1])
        a, b = cli.run("cdel-single", single), cli.run("oracle:cdel", single)
        assert (a.decision, a.optimum) == (b.decision, b.optimum)


# --- main() -------------------------------------------------------------------


def test_main_exit_codes(six_voter_file, capsys):
    assert cli.main(["rdel", str(six_voter_file)]) == 0
    assert cli.main(["swap", str(six_voter_file)]) == 1
    assert cli.main(["cdel-k0", str(six_voter_file)]) == 2
    assert cli.main(["rdel", str(six_voter_file) + ".missing"]) == 2
    assert cli.main(["nonsense", str(six_voter_file)]) == 2
    assert cli.main(["rdel"]) == 2
    out = capsys.readouterr().out
    assert "decision" in out and "YES" in out


def test_main_json_lines(six_voter_file, capsys):
    assert cli.main(["dollar", str(six_voter_file), "--json", "--verify"]) == 0
    rec = json.loads(capsys.readouterr().out.strip())
    assert rec["decision"] is True and rec["witness"] == [6] and rec["verification"] == "pass"
    assert rec["source"] == str(six_voter_file) and len(rec["digest"]) == 64


def test_main_glob_worst_status(tmp_path, capsys):
    (tmp_path / "a.txt").write_text(SIX_VOTERS)
    (tmp_path / "b.txt").write_text(SIX_VOTERS.replace("budget: 1", "budget: 0"))
    (tmp_path / "c.txt").write_text("candidates: a\n")
    code = cli.main(["rdel", "--glob", str(tmp_path / "*.txt"), "--json"])
    lines = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert code == 2 and len(lines) == 3
    assert [rec.get("decision") for rec in lines[:2]] == [True, False]
    assert "error" in lines[2]
    assert cli.main(["rdel", "--glob", str(tmp_path / "*.none")]) == 2


def test_main_cap_and_env(six_voter_file, monkeypatch, capsys):
    assert cli.main(["oracle:dollar", str(six_voter_file), "--cap", "10"]) == 2
    monkeypatch.setenv("KEMENY_ORACLE_CAP", "10")
    assert cli.main(["oracle:dollar", str(six_voter_file)]) == 2
    assert cli.main(["oracle:dollar", str(six_voter_file), "--cap", "100"]) == 0
    capsys.readouterr()


def test_gen_is_deterministic_and_parses(capsys, tmp_path):
    args = ["gen", "--m", "5", "--n", "4", "--model", "mallows", "--phi", "0.5", "--seed", "7", "--k", "3"]
    assert cli.main(args) == 0
    first = capsys.readouterr().out
    assert cli.main(args) == 0
    assert capsys.readouterr().out == first
    inst = parse_instance(first).instance
    assert inst.m == 5 and inst.n == 4 and inst.k == 3
    path = tmp_path / "gen.txt"
    path.write_text(first)
    assert cli.main(["swap", str(path), "--json"]) in (0, 1)
    assert cli.main(["gen", "--m", "0", "--n", "1"]) == 2
    capsys.readouterr()
