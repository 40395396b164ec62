"""
Completing partial rankings
===========================

Each missing candidate is slotted in, in target order, at the cheapest
position that keeps the insertions left to right.
"""

from kemenyscore import make_instance, optimal_extension, solve_pks
from kemenyscore.oracles import oracle_pks

inst = make_instance("a b c d", "a b c d", ["d a", "c", "b d a"], k=4)

###########################################################################
# One ranking at a time, with the insertion trace (candidate, block index).

for r in inst.profile:
    res = optimal_extension(inst.target, r)
    trace = [(inst.labels[c], q) for c, q in res.insert_trace]
    print(r, "->", res.extended, "distance", res.distance, trace)

###########################################################################
# The decision for the whole profile, compared against brute force.

res = solve_pks(inst)
print("YES" if res.decision else "NO", "total", res.distance)
print("exhaustive minimum:", oracle_pks(inst).optimum)
