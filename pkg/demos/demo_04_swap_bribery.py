"""
Paying per adjacent swap
========================

The table keeps, per ranking, the cheapest way to buy a given number of
swaps over the rankings so far; the witness is an explicit swap script.
"""

from kemenyscore import make_instance, solve_swap_bribery, greedy_swap_oracle
from kemenyscore.swap_bribery import SwapDPTable, literal_swap_table
from kemenyscore.oracles import oracle_swap

inst = make_instance(
    "a b c d", "a b c d",
    ["b a c d", "d c b a", "a c b d", "c a d b"],
    k=3, budget=8, ranking_costs=[2, 1, 3, 1],
)

###########################################################################
# Distances, costs, and the answer.

res = solve_swap_bribery(inst)
print("min cost", res.min_cost, "swaps per ranking", res.allocation)
for r, script in zip(inst.profile, res.witness.swap_script):
    print(r, "swap positions", script)

###########################################################################
# The compact table answers every cell of the full recurrence.

from kemenyscore import kendall_tau

d = [kendall_tau(inst.target, r) for r in inst.profile]
table = SwapDPTable(d, inst.ranking_costs, inst.k)
dense = literal_swap_table(d, inst.ranking_costs, inst.k)
print(all(table.entry(*key) == val for key, val in dense.items()), len(dense), "cells")

###########################################################################
# Two independent checks.

print(greedy_swap_oracle(inst), oracle_swap(inst).optimum)
