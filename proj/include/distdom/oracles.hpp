#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "distdom/graph.hpp"
#include "distdom/hypergraph.hpp"
#include "distdom/independence.hpp"
#include "distdom/ordering.hpp"

namespace distdom {

/// Limits for the exponential-time searches. Every oracle throws
/// BudgetExceeded instead of running past them.
struct OracleBudget {
  int max_vertices = 14;                // graph (or hypergraph edge) count
  int max_subset_size = 1 << 30;        // largest candidate set examined
  std::uint64_t max_nodes = 50'000'000;  // search nodes

  /// Defaults, with max_vertices overridden by DISTDOM_BUDGET_VERTICES.
  static OracleBudget from_env();
  bool admits(int n) const noexcept { return n <= max_vertices; }
};

struct SetWitness {
  int value = 0;
  VertexSet witness;
};

/// gamma_r by iterative deepening over candidate sizes; branches on the
/// balls containing the smallest undominated vertex.
SetWitness brute_gamma_r(const Graph& g, int r, const OracleBudget& budget = {});

/// Decides whether an r-dominating set of size <= max_size exists (the
/// witness when it does). Ignores max_vertices; bounded by max_nodes only,
/// so it can certify lower bounds on graphs too large for brute_gamma_r.
std::optional<VertexSet> find_r_dominating_set(const Graph& g, int r, int max_size, const OracleBudget& budget = {});

/// Largest proven lower bound on gamma_r within the node budget; `optimum`
/// is set when the search reached a dominating set (then lower == gamma_r).
struct GammaBound {
  int lower = 0;
  std::optional<VertexSet> optimum;
};
GammaBound gamma_lower_bound(const Graph& g, int r, const OracleBudget& budget = {});

/// alpha_2r: maximum independent set of the distance-<=-2r conflict graph.
SetWitness brute_alpha_2r(const Graph& g, int r, const OracleBudget& budget = {});

/// alpha_{2r,b}: maximum Y with |N_r[v] cap Y| <= b for all v.
SetWitness brute_alpha_2rb(const Graph& g, int r, int b, const OracleBudget& budget = {});

struct WcolWitness {
  int value = 0;
  Ordering ordering;
};

/// Minimum over all orderings of the weak k-coloring number. Budget is
/// applied to the vertex count (exhaustive search grows like n!).
WcolWitness brute_wcol(const Graph& g, int k, const OracleBudget& budget = {});

/// mu_b by plain enumeration of edge subsets; budget applies to the edge count.
BMatching brute_bmatching(const Hypergraph& h, int b, const OracleBudget& budget = {});

}  // namespace distdom
