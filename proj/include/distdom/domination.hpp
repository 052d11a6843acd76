#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "distdom/augmentation.hpp"
#include "distdom/graph.hpp"
#include "distdom/lp.hpp"
#include "distdom/ordering.hpp"

namespace distdom {

/// a = (D_{r-1} + 1) * D_r - D_{r-1} for the indegree profile D of an
/// r-augmentation, alongside the looser D_r^2 and, for r = 1, 2d + 1 with
/// d = D_1 - 1.
struct GuaranteeFactor {
  std::int64_t a = 0;
  std::int64_t square_bound = 0;
  std::optional<std::int64_t> degenerate_bound;
};

GuaranteeFactor guarantee_factor(const IndegreeProfile& profile, int r);

struct SweepStep {
  Vertex vertex;
  std::vector<Vertex> added;
};

struct DominationResult {
  VertexSet set;
  std::size_t x0_size = 0;
  std::int64_t a = 0;
  int r = 0;
  NumericMode mode = NumericMode::Float;
  Rational lp_value;   // sum of the rounded solution
  double lp_value_float = 0.0;
  std::vector<SweepStep> trace;
  bool valid = false;     // re-checked: set is r-dominating
  bool bound_ok = false;  // |set| <= a * lp_value (exact), or within 1e-6 slack in float mode
};

struct RoundingOptions {
  bool record_trace = false;
  // Also decide "some chosen vertex within distance r" through (DIST) on the
  // augmentation and throw if the two answers ever disagree.
  bool cross_check_with_augmentation = false;
};

/// Threshold-then-sweep rounding of a feasible fractional r-dominating set.
///
/// X_0 takes every vertex with x_v >= 1/a. The sweep then visits vertices in
/// `sweep` order; a vertex with nothing chosen within distance r pulls in all
/// of its inneighbors u with rho(u v) <= r - 1, itself included through its
/// loop. The result has at most a * sum_v x_v vertices.
///
/// Float mode compares against 1/a - 1e-9, which can only enlarge X_0.
/// Throws InputError when x violates a covering constraint.
DominationResult round_dominating(const Graph& g, const Augmentation& aug, const LpSolution& x,
                                  const Ordering& sweep, const RoundingOptions& options = {});

enum class SweepOrder { Augmentation, Input, Random };
SweepOrder parse_sweep_order(const std::string& name);
std::string to_string(SweepOrder order);

/// Sweep sequence for a run: the augmentation's source ordering, the input
/// order, or a seeded shuffle.
Ordering make_sweep(SweepOrder order, const Ordering& source, std::uint64_t seed);

nlohmann::json domination_result_to_json(const DominationResult& result);

}  // namespace distdom
