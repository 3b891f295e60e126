"""Acyclic matchings in bounded-degree graphs.

Certified approximation solver, exact small-instance oracles, certificate
verifiers, closed-form bounds and instance generators. The heavy lifting
lives in the C++ extension; ``solve`` returns the same report the CLI prints.
"""

import json as _json

from acymatch._core import (
    AcymatchError,
    Graph,
    PRNG_ID,
    cmp_le_plus_sqrt,
    edge_lower_bound,
    exact_max,
    gen_complete,
    gen_complete_bipartite,
    gen_cycle,
    gen_joos,
    gen_path,
    gen_random_capped,
    gen_random_tree,
    greedy_acyclic,
    is_acyclic_matching,
    is_corona_forest,
    is_induced_matching,
    is_k_degenerate_matching,
    is_matching,
    joos_bound,
    kdeg_adapted_coefficient,
    kdeg_conjecture_bound,
    meets_thm1,
    parse_edge_list,
    read_edge_list,
    regular_upper_bound,
    solve_json,
    thm1_bound,
    to_edge_list,
)

__all__ = [
    "AcymatchError",
    "Graph",
    "PRNG_ID",
    "cmp_le_plus_sqrt",
    "edge_lower_bound",
    "exact_max",
    "gen_complete",
    "gen_complete_bipartite",
    "gen_cycle",
    "gen_joos",
    "gen_path",
    "gen_random_capped",
    "gen_random_tree",
    "greedy_acyclic",
    "is_acyclic_matching",
    "is_corona_forest",
    "is_induced_matching",
    "is_k_degenerate_matching",
    "is_matching",
    "joos_bound",
    "kdeg_adapted_coefficient",
    "kdeg_conjecture_bound",
    "meets_thm1",
    "parse_edge_list",
    "read_edge_list",
    "regular_upper_bound",
    "solve",
    "solve_json",
    "thm1_bound",
    "to_edge_list",
]

__version__ = "0.1.0"


def solve(graph, trace=False):
    """Solve and return the certified report as a dict.

    Keys: n0, m0, delta, size, bound_ok, isolated_dropped, matching, stages.
    With ``trace=True`` each local-search stage carries its partition and
    inequality checks.
    """
    return _json.loads(solve_json(graph, trace))
