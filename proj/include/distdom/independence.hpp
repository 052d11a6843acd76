#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "distdom/augmentation.hpp"
#include "distdom/graph.hpp"
#include "distdom/hypergraph.hpp"
#include "distdom/lp.hpp"

namespace distdom {

/// Edge e_u (label u) = inneighbors of u, u itself included via its loop.
Hypergraph inneighbor_hypergraph(const Augmentation& aug);

struct BMatching {
  std::vector<int> selected;  // edge labels, ascending
  int b = 0;
};

/// Every vertex lies in at most b selected edges. Unknown labels fail.
bool is_b_matching(const Hypergraph& h, const BMatching& m);

enum class MatchingStrategy { Threshold, ThresholdGreedy, Exact };
MatchingStrategy parse_matching_strategy(const std::string& name);
std::string to_string(MatchingStrategy s);

struct MatchingLimits {
  std::size_t max_edges = 60;
  std::uint64_t max_nodes = 20'000'000;
};

/// k-matching from a fractional matching m (one value per edge, feasible for
/// bmatching_lp(h, 1)).
///
/// Threshold keeps M_1 = {e : m_e >= 1/k}. ThresholdGreedy then adds edges in
/// index order while the bound allows. Exact returns a maximum k-matching by
/// branch and bound; it throws BudgetExceeded above `limits.max_edges` edges
/// or when the node budget runs out.
BMatching extract_kmatching(const Hypergraph& h, int k, const LpSolution& m, MatchingStrategy strategy,
                            const MatchingLimits& limits = {});

/// Maximum b-matching by branch and bound (same limits as above).
BMatching maximum_bmatching(const Hypergraph& h, int b, const MatchingLimits& limits = {});

struct OutBoundedResult {
  VertexSet y;
  int k = 0;                 // Delta_r of the augmentation
  LpSolution packing;        // per-vertex optimum of the packing LP
  BMatching matching;
  std::vector<int> out_counts;  // per vertex v: |{y in Y : v -> y}|
};

/// Y = {u : e_u selected} for the k-matching extracted from m_{e_u} = y_u,
/// where y is the solver's optimum of the radius-r packing LP (or `packing`
/// when the caller already solved it).
OutBoundedResult out_bounded_set(const Graph& g, const Augmentation& aug, MatchingStrategy strategy,
                                 NumericMode mode, const MatchingLimits& limits = {},
                                 const LpSolution* packing = nullptr);

struct IndependenceCertificate {
  bool ok = true;
  Vertex worst_vertex = -1;  // a vertex attaining `count`, -1 for empty graphs
  int count = 0;             // max_v |N_r[v] cap Y|
  std::vector<int> counts;
};

IndependenceCertificate certify_2rb_independent(const Graph& g, const VertexSet& y, int r, std::int64_t b);

struct SparsifyResult {
  VertexSet y1;
  std::int64_t d = 0;        // b * Delta_2r
  int colors = 0;
  std::size_t conflict_edges = 0;
};

/// Largest color class of a smallest-last coloring of the conflict graph on
/// y (pairs at distance <= 2r), where r = aug2r.radius() / 2. Ties go to the
/// class holding the smallest id.
/// Throws InputError unless y is (2r, b)-independent.
SparsifyResult sparsify_to_independent(const Graph& g, const Augmentation& aug2r, const VertexSet& y,
                                       std::int64_t b);

/// Orientation of the conflict graph on y: y2 -> y1 whenever some inneighbor
/// v of y1 in aug2r has y2 in N_r[v]. Returned as (tail, head) vertex pairs.
std::vector<Edge> conflict_orientation(const Graph& g, const Augmentation& aug2r, const VertexSet& y);

nlohmann::json bmatching_to_json(const BMatching& m);

}  // namespace distdom
