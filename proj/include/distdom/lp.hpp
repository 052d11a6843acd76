#pragma once

#include <optional>
#include <string>
#include <vector>

#include "distdom/graph.hpp"
#include "distdom/hypergraph.hpp"
#include "distdom/rational.hpp"

namespace distdom {

enum class Sense { Minimize, Maximize };
enum class Relation { LessEqual, GreaterEqual, Equal };
enum class NumericMode { Float, Exact };
enum class LpStatus { Optimal, Infeasible, Unbounded };

std::string to_string(NumericMode mode);
std::string to_string(LpStatus status);

// Float-mode pivot and feasibility tolerance.
inline constexpr double kFloatTolerance = 1e-9;

struct LpTerm {
  int var;
  Rational coef;
};

struct LpConstraint {
  std::vector<LpTerm> terms;
  Relation relation;
  Rational rhs;
};

struct VariableBounds {
  Rational lower = 0;
  std::optional<Rational> upper;  // nullopt is +infinity
};

/// An LP over continuous variables: optimize c.x subject to rows and boxes.
struct LinearProgram {
  Sense sense = Sense::Minimize;
  std::vector<Rational> objective;
  std::vector<LpConstraint> constraints;
  std::vector<VariableBounds> bounds;

  LinearProgram() = default;
  LinearProgram(Sense s, int num_vars)
      : sense(s), objective(static_cast<std::size_t>(num_vars)), bounds(static_cast<std::size_t>(num_vars)) {}

  int num_vars() const noexcept { return static_cast<int>(objective.size()); }
  void add_constraint(std::vector<LpTerm> terms, Relation rel, Rational rhs) {
    constraints.push_back({std::move(terms), rel, std::move(rhs)});
  }

  /// Throws InputError on out-of-range indices, empty rows or inverted boxes.
  void validate() const;
};

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  NumericMode mode = NumericMode::Float;
  std::vector<double> values;
  double objective = 0.0;
  // Exact mode only.
  std::vector<Rational> exact_values;
  Rational exact_objective;
  std::size_t pivots = 0;

  bool optimal() const noexcept { return status == LpStatus::Optimal; }
  bool exact() const noexcept { return mode == NumericMode::Exact; }
  std::size_t size() const noexcept { return values.size(); }

  /// Objective as a rational: exact in exact mode, the double's exact value otherwise.
  Rational objective_rational() const { return exact() ? exact_objective : Rational(objective); }
  std::string objective_string() const;
};

/// Solves with a dense two-phase tableau simplex using Bland's rule.
/// Exact mode pivots over GMP rationals; float mode uses kFloatTolerance.
LpSolution solve(const LinearProgram& lp, NumericMode mode);

/// Checks every row and box (exactly in exact mode, within `tolerance` otherwise).
bool is_feasible(const LinearProgram& lp, const LpSolution& sol, double tolerance = 1e-7);

/// Plain-text dump, one constraint per line with exact rational coefficients:
///   min: 1 x0 + 1 x1
///   c0: 1 x0 + 1 x1 >= 1
///   b0: 0 <= x0 <= inf
std::string dump_lp(const LinearProgram& lp);

/// LP over the ball system {N_r[u]} with one column per class of vertices
/// sharing the same ball (and hence the same row and column).
struct BallLp {
  LinearProgram lp;
  int n = 0;
  std::vector<Vertex> column_vertex;    // representative of each column
  std::vector<int> column_of_vertex;    // column of each vertex's class

  /// Per-vertex solution: representatives carry the column value, the rest 0.
  LpSolution to_vertices(const LpSolution& sol) const;
};

/// min sum x_v  s.t.  sum_{v in N_r[u]} x_v >= 1 for all u, x >= 0.
BallLp domination_lp(const Graph& g, int r, bool dedupe = true);

/// max sum y_u  s.t.  sum_{u in N_r[v]} y_u <= 1 for all v, y >= 0.
BallLp independence_lp(const Graph& g, int r, bool dedupe = true);

/// max sum m_e  s.t.  sum_{e ni v} m_e <= b for all v, 0 <= m_e <= 1.
/// Variable i belongs to edge i of the hypergraph.
LinearProgram bmatching_lp(const Hypergraph& h, int b);

/// Convenience wrappers returning per-vertex solutions.
LpSolution solve_domination(const Graph& g, int r, NumericMode mode);
LpSolution solve_independence(const Graph& g, int r, NumericMode mode);

}  // namespace distdom
