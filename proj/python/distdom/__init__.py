"""Distance-r domination and independence on graphs with bounded weak coloring numbers."""

from fractions import Fraction

from . import _core
from ._core import (
    Augmentation,
    BudgetExceeded,
    Error,
    Graph,
    InputError,
    ParseError,
    analyze,
    analyze_instance_file,
    augment_from_ordering,
    brute_alpha,
    brute_gamma,
    brute_wcol,
    certify_2rb_independent,
    clique_construction,
    covering_hard_construction,
    cycle_graph,
    degeneracy,
    grid_graph,
    guarantee_factor,
    heuristic_ordering,
    orientation_augmentation,
    out_bounded_set,
    path_graph,
    random_degenerate,
    round_dominating,
    sparsify_to_independent,
    wcol_of_ordering,
    weakly_reachable,
)

__all__ = [name for name in dir(_core) if not name.startswith("_")] + [
    "domination_lp_value",
    "independence_lp_value",
]


def _with_fractions(sol):
    if "exact_objective" in sol:
        sol["exact_objective"] = Fraction(sol["exact_objective"])
        sol["exact_values"] = [Fraction(v) for v in sol["exact_values"]]
    return sol


def solve_domination(graph, r, exact=True):
    return _with_fractions(_core.solve_domination(graph, r, exact))


def solve_independence(graph, r, exact=True):
    return _with_fractions(_core.solve_independence(graph, r, exact))


def domination_lp_value(graph, r):
    """gamma*_r as a Fraction."""
    return solve_domination(graph, r)["exact_objective"]


def independence_lp_value(graph, r):
    """alpha*_2r as a Fraction."""
    return solve_independence(graph, r)["exact_objective"]
