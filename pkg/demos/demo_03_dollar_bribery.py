"""
Buying or deleting whole rankings
=================================

Rewriting a ranking to the target and deleting it both remove its distance,
so both questions are the same value-indexed Knapsack.
"""

import numpy as np

from kemenyscore import generate_profile, Ranking, ManipulationInstance
from kemenyscore import reduce_dollar_to_knapsack, solve_dollar_bribery, solve_ranking_deletion

rng = np.random.default_rng(0)
m, n = 8, 12
profile = generate_profile(m, n, "mallows", phi=0.6, seed=1)
costs = tuple(int(c) for c in rng.integers(1, 5, size=n))
inst = ManipulationInstance(
    labels=tuple("abcdefgh"), target=Ranking(range(m)), profile=profile,
    k=40, budget=6, ranking_costs=costs,
)

###########################################################################
# The Knapsack view: item weight = cost, item value = distance.

kp = reduce_dollar_to_knapsack(inst)
print("values ", kp.values)
print("weights", kp.weights)
print("need value", kp.target, "within weight", kp.capacity)

###########################################################################
# Solve both actions.  The optimum is the cheapest way to reach distance k,
# reported even when the budget falls short.

for solver in (solve_dollar_bribery, solve_ranking_deletion):
    res = solver(inst)
    print(solver.__name__, res.decision, "optimum", res.optimum, "rankings", res.witness)

###########################################################################
# Sweep the budget to see where the answer flips.

for budget in range(0, 14, 2):
    print(budget, solve_dollar_bribery(inst.replace(budget=budget)).decision)
