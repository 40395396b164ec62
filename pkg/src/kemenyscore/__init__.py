"""Exact solvers for manipulating the Kemeny score of a fixed target ranking.

Given a profile of rankings, a target ranking ``X``, costs, a budget and a
bound ``k``, decide whether $-bribery, swap bribery, ranking deletion,
candidate deletion or completion of partial rankings can bring the total
Kendall tau distance of ``X`` to the profile down to ``k``, and produce a
witness that re-verifies independently.
"""

from .candidate_deletion import (
    HCISInstance,
    PermutationGraph,
    WPVCInstance,
    build_permutation_graph,
    reduce_cd_to_hcis,
    reduce_cd_to_wpvc,
    reduce_wpvc_to_cd,
    solve_cd_k0,
    solve_cd_single_ranking,
    solve_hcis,
    solve_wpvc_bruteforce,
    target_index_map,
)
from .core import (
    Candidate,
    CostModel,
    ManipulationInstance,
    Ranking,
    agrees_over,
    apply_adjacent_swap,
    disagreements_wrt,
    distance_to_profile,
    find_admissible_disagreement,
    kendall_tau,
    make_instance,
    restrict,
)
from .io import generate_profile, parse_instance, render_instance
from .knapsack_bribery import (
    KnapsackInstance,
    reduce_dollar_to_knapsack,
    solve_dollar_bribery,
    solve_knapsack_value_dp,
    solve_ranking_deletion,
)
from .oracles import (
    OracleBudget,
    oracle_candidate_deletion,
    oracle_dollar,
    oracle_pks,
    oracle_swap,
)
from .possible_kemeny import insert_after_block, optimal_extension, solve_pks
from .swap_bribery import greedy_swap_oracle, solve_swap_bribery, swap_dp_base

__version__ = "0.1.0"
