"""
Deleting candidates
===================

With k = 0 the survivors must be ordered identically everywhere, which is a
heaviest common increasing subsequence.  With a single ranking the question
is a partial vertex cover on the graph of its inversions.
"""

from kemenyscore import make_instance, reduce_cd_to_hcis, solve_hcis, solve_cd_k0
from kemenyscore import build_permutation_graph, reduce_cd_to_wpvc, solve_cd_single_ranking

inst = make_instance(
    "a b c d e", "a b c d e",
    ["b a c e d", "a c b d e", "a b d c e"],
    k=0, budget=3, candidate_costs={"a": 2, "b": 1, "c": 1, "d": 3, "e": 1},
)

###########################################################################
# k = 0 through the subsequence problem.

h = reduce_cd_to_hcis(inst)
sol = solve_hcis(h)
print("sequences", h.sequences, "keep weight", sol.weight, "values", sol.sequence)
res = solve_cd_k0(inst)
print("delete", [inst.labels[c] for c in res.witness], "cost", res.cost)

###########################################################################
# One ranking, k > 0: edges are inverted pairs.

single = make_instance("a b c d", "a b c d", ["d b a c"], k=1, budget=1)
g = reduce_cd_to_wpvc(single).graph
print("edges", g.edges)
res = solve_cd_single_ranking(single)
print(res.decision, [single.labels[c] for c in res.witness], "left", res.residual_distance)

###########################################################################
# Permutation graphs on their own.

print(build_permutation_graph((3, 1, 2, 4)).edges)
