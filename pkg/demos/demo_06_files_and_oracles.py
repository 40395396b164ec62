"""
Instance files, generation and brute-force cross-checks
=======================================================
"""

from kemenyscore import parse_instance, render_instance, generate_profile, Ranking
from kemenyscore import ManipulationInstance
from kemenyscore.cli import run, SOLVER_ACTIONS

text = """\
candidates: a b c
X: a c b
k: 3
budget: 1
R: a b c
R: a b c
R: a b c
R: a c b
R: a c b
R: c b a
"""

###########################################################################
# Parse, then run every solver that fits the instance.

inst = parse_instance(text).instance
for action in ("pks", "dollar", "rdel", "swap"):
    rec = run(action, inst)
    print(f"{action:6} {'YES' if rec.decision else 'NO ':3} optimum={rec.optimum} witness={rec.witness}")

###########################################################################
# Solver against oracle on random small instances.

pairs = {"pks": "oracle:pks", "dollar": "oracle:dollar", "swap": "oracle:swap"}
agree = 0
for seed in range(30):
    prof = generate_profile(4, 3, seed=seed)
    case = ManipulationInstance(tuple("wxyz"), Ranking(range(4)), prof, k=seed % 7, budget=seed % 4)
    agree += all(
        (run(s, case).decision, run(s, case).optimum) == (run(o, case).decision, run(o, case).optimum)
        for s, o in pairs.items()
    )
print(agree, "of 30 agree")

###########################################################################
# Round trip through the text format.

print(render_instance(inst) == render_instance(parse_instance(render_instance(inst)).instance))
print(SOLVER_ACTIONS)
