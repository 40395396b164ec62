"""
Kendall tau distance and adjacent swaps
=======================================

Rankings are tuples of dense candidate ids; labels only matter at the edges.
"""

###########################################################################
# A small profile: three voters over four candidates.

from kemenyscore import make_instance, kendall_tau, distance_to_profile
from kemenyscore.core import apply_adjacent_swap, find_admissible_disagreement

inst = make_instance("a b c d", "a b c d", ["b a c d", "d c b a", "a c b d"])
x = inst.target
for r in inst.profile:
    print(r, "->", kendall_tau(x, r))
print("total distance of X:", distance_to_profile(x, inst.profile))

###########################################################################
# Partial rankings are compared on the candidates they share.

print(kendall_tau(inst.ranking("d a"), x))  # the single pair (a, d) is flipped

###########################################################################
# Repairing a ranking one adjacent swap at a time.  Every swap of an
# adjacent pair that disagrees with X removes exactly one inversion.

r = inst.profile[1]
while (p := find_admissible_disagreement(r, x)) is not None:
    r = apply_adjacent_swap(r, p)
    print(f"swap at {p}: {r}  distance {kendall_tau(x, r)}")
