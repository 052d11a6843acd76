#include "distdom/lp.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "distdom/error.hpp"
#include "simplex.hpp"

namespace distdom {

std::string to_string(NumericMode mode) { return mode == NumericMode::Exact ? "exact" : "float"; }

std::string to_string(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "?";
}

std::string LpSolution::objective_string() const {
  if (exact()) return exact_objective.get_str();
  std::ostringstream out;
  out.precision(17);
  out << objective;
  return out.str();
}

void LinearProgram::validate() const {
  const int n = num_vars();
  if (bounds.size() != objective.size()) throw InputError("bounds and objective sizes differ");
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    if (constraints[i].terms.empty()) throw InputError("constraint " + std::to_string(i) + " is empty");
    for (const auto& t : constraints[i].terms)
      if (t.var < 0 || t.var >= n) throw InputError("constraint " + std::to_string(i) + " references variable " +
                                                    std::to_string(t.var));
  }
  for (std::size_t j = 0; j < bounds.size(); ++j)
    if (bounds[j].upper && *bounds[j].upper < bounds[j].lower)
      throw InputError("variable " + std::to_string(j) + " has an empty box");
}

namespace {

constexpr std::size_t kPivotLimit = 5'000'000;

template <class Field>
LpSolution solve_with(const LinearProgram& lp) {
  using T = typename Field::Scalar;
  using Tab = detail::Tableau<Field>;
  const auto n = static_cast<std::size_t>(lp.num_vars());

  // Shift x = lower + x', move finite upper bounds into rows, and minimize.
  std::vector<typename Tab::Row> rows;
  auto push_row = [&](std::vector<T> coef, Relation rel, T rhs) {
    if (Field::negative(rhs)) {
      for (auto& c : coef) c = -c;
      rhs = -rhs;
      if (rel == Relation::LessEqual) rel = Relation::GreaterEqual;
      else if (rel == Relation::GreaterEqual) rel = Relation::LessEqual;
    }
    rows.push_back({std::move(coef), rel, std::move(rhs)});
  };
  for (const auto& con : lp.constraints) {
    std::vector<T> coef(n, T(0));
    Rational shift = con.rhs;
    for (const auto& t : con.terms) {
      coef[static_cast<std::size_t>(t.var)] += Field::from(t.coef);
      shift -= t.coef * lp.bounds[static_cast<std::size_t>(t.var)].lower;
    }
    push_row(std::move(coef), con.relation, Field::from(shift));
  }
  for (std::size_t j = 0; j < n; ++j) {
    const auto& b = lp.bounds[j];
    if (!b.upper) continue;
    std::vector<T> coef(n, T(0));
    coef[j] = T(1);
    push_row(std::move(coef), Relation::LessEqual, Field::from(Rational(*b.upper - b.lower)));
  }
  std::vector<T> cost(n);
  for (std::size_t j = 0; j < n; ++j)
    cost[j] = Field::from(lp.sense == Sense::Minimize ? lp.objective[j] : Rational(-lp.objective[j]));

  auto result = Tab::run(n, cost, rows, kPivotLimit);

  LpSolution sol;
  sol.status = result.status;
  sol.pivots = result.pivots;
  sol.mode = std::is_same_v<T, Rational> ? NumericMode::Exact : NumericMode::Float;
  if (result.status != LpStatus::Optimal) return sol;
  if constexpr (std::is_same_v<T, Rational>) {
    sol.exact_values.resize(n);
    sol.exact_objective = 0;
    for (std::size_t j = 0; j < n; ++j) {
      sol.exact_values[j] = result.x[j] + lp.bounds[j].lower;
      sol.exact_objective += lp.objective[j] * sol.exact_values[j];
    }
    sol.values.resize(n);
    for (std::size_t j = 0; j < n; ++j) sol.values[j] = sol.exact_values[j].get_d();
    sol.objective = sol.exact_objective.get_d();
  } else {
    sol.values.resize(n);
    sol.objective = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      double v = result.x[j];
      if (std::fabs(v) < kFloatTolerance) v = 0.0;
      sol.values[j] = v + lp.bounds[j].lower.get_d();
      sol.objective += lp.objective[j].get_d() * sol.values[j];
    }
  }
  return sol;
}

}  // namespace

LpSolution solve(const LinearProgram& lp, NumericMode mode) {
  lp.validate();
  return mode == NumericMode::Exact ? solve_with<detail::ExactField>(lp) : solve_with<detail::FloatField>(lp);
}

bool is_feasible(const LinearProgram& lp, const LpSolution& sol, double tolerance) {
  if (sol.size() != static_cast<std::size_t>(lp.num_vars())) return false;
  if (sol.exact()) {
    for (const auto& con : lp.constraints) {
      Rational lhs = 0;
      for (const auto& t : con.terms) lhs += t.coef * sol.exact_values[static_cast<std::size_t>(t.var)];
      if (con.relation == Relation::LessEqual && lhs > con.rhs) return false;
      if (con.relation == Relation::GreaterEqual && lhs < con.rhs) return false;
      if (con.relation == Relation::Equal && lhs != con.rhs) return false;
    }
    for (std::size_t j = 0; j < lp.bounds.size(); ++j) {
      const auto& x = sol.exact_values[j];
      if (x < lp.bounds[j].lower || (lp.bounds[j].upper && x > *lp.bounds[j].upper)) return false;
    }
    return true;
  }
  for (const auto& con : lp.constraints) {
    double lhs = 0.0;
    for (const auto& t : con.terms) lhs += t.coef.get_d() * sol.values[static_cast<std::size_t>(t.var)];
    double rhs = con.rhs.get_d();
    if (con.relation != Relation::GreaterEqual && lhs > rhs + tolerance) return false;
    if (con.relation != Relation::LessEqual && lhs < rhs - tolerance) return false;
  }
  for (std::size_t j = 0; j < lp.bounds.size(); ++j) {
    double x = sol.values[j];
    if (x < lp.bounds[j].lower.get_d() - tolerance) return false;
    if (lp.bounds[j].upper && x > lp.bounds[j].upper->get_d() + tolerance) return false;
  }
  return true;
}

std::string dump_lp(const LinearProgram& lp) {
  std::ostringstream out;
  auto terms = [&](const std::vector<LpTerm>& ts) {
    for (std::size_t i = 0; i < ts.size(); ++i)
      out << (i ? " + " : "") << ts[i].coef.get_str() << " x" << ts[i].var;
  };
  std::vector<LpTerm> obj;
  for (int j = 0; j < lp.num_vars(); ++j)
    if (sgn(lp.objective[static_cast<std::size_t>(j)]) != 0) obj.push_back({j, lp.objective[static_cast<std::size_t>(j)]});
  out << (lp.sense == Sense::Minimize ? "min: " : "max: ");
  if (obj.empty()) out << "0";
  terms(obj);
  out << '\n';
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    const auto& con = lp.constraints[i];
    out << 'c' << i << ": ";
    terms(con.terms);
    out << (con.relation == Relation::LessEqual ? " <= " : con.relation == Relation::GreaterEqual ? " >= " : " = ")
        << con.rhs.get_str() << '\n';
  }
  for (std::size_t j = 0; j < lp.bounds.size(); ++j) {
    out << 'b' << j << ": " << lp.bounds[j].lower.get_str() << " <= x" << j << " <= "
        << (lp.bounds[j].upper ? lp.bounds[j].upper->get_str() : std::string("inf")) << '\n';
  }
  return out.str();
}

// --- ball-system LPs ---------------------------------------------------------

LpSolution BallLp::to_vertices(const LpSolution& sol) const {
  LpSolution out = sol;
  if (!sol.optimal()) return out;
  out.values.assign(static_cast<std::size_t>(n), 0.0);
  if (sol.exact()) out.exact_values.assign(static_cast<std::size_t>(n), Rational(0));
  for (std::size_t c = 0; c < column_vertex.size(); ++c) {
    auto v = static_cast<std::size_t>(column_vertex[c]);
    out.values[v] = sol.values[c];
    if (sol.exact()) out.exact_values[v] = sol.exact_values[c];
  }
  return out;
}

namespace {

BallLp ball_lp(const Graph& g, int r, bool dedupe, Sense sense) {
  if (r < 1) throw InputError("ball LP radius must be at least 1");
  BallTable balls(g, r);
  BallLp out;
  out.n = g.n();
  out.column_of_vertex.assign(static_cast<std::size_t>(g.n()), -1);
  std::map<std::vector<Vertex>, int> classes;
  for (Vertex v = 0; v < g.n(); ++v) {
    int col = static_cast<int>(out.column_vertex.size());
    if (dedupe) {
      auto [it, inserted] = classes.emplace(balls.ball(v).members(), col);
      if (!inserted) {
        out.column_of_vertex[static_cast<std::size_t>(v)] = it->second;
        continue;
      }
    }
    out.column_of_vertex[static_cast<std::size_t>(v)] = col;
    out.column_vertex.push_back(v);
  }
  const int cols = static_cast<int>(out.column_vertex.size());
  out.lp = LinearProgram(sense, cols);
  for (auto& c : out.lp.objective) c = 1;
  // N_r is symmetric, so the row of u touches column c iff rep(c) is in N_r[u];
  // rows of vertices in the same class coincide and are emitted once.
  for (int c = 0; c < cols; ++c) {
    Vertex u = out.column_vertex[static_cast<std::size_t>(c)];
    std::vector<LpTerm> terms;
    std::vector<char> used(static_cast<std::size_t>(cols), 0);
    for (Vertex v : balls.ball(u)) {
      int col = out.column_of_vertex[static_cast<std::size_t>(v)];
      if (used[static_cast<std::size_t>(col)]) {
        if (!dedupe) throw Error("ball LP column collision");
        continue;
      }
      used[static_cast<std::size_t>(col)] = 1;
      terms.push_back({col, Rational(1)});
    }
    std::sort(terms.begin(), terms.end(), [](const LpTerm& a, const LpTerm& b) { return a.var < b.var; });
    out.lp.add_constraint(std::move(terms), sense == Sense::Minimize ? Relation::GreaterEqual : Relation::LessEqual,
                          Rational(1));
  }
  return out;
}

}  // namespace

BallLp domination_lp(const Graph& g, int r, bool dedupe) { return ball_lp(g, r, dedupe, Sense::Minimize); }

BallLp independence_lp(const Graph& g, int r, bool dedupe) { return ball_lp(g, r, dedupe, Sense::Maximize); }

LinearProgram bmatching_lp(const Hypergraph& h, int b) {
  if (b < 1) throw InputError("b-matching bound must be at least 1");
  LinearProgram lp(Sense::Maximize, static_cast<int>(h.edge_count()));
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    lp.objective[e] = 1;
    lp.bounds[e].upper = Rational(1);
  }
  std::vector<std::vector<LpTerm>> rows(static_cast<std::size_t>(h.nv()));
  for (std::size_t e = 0; e < h.edge_count(); ++e)
    for (Vertex v : h.edge(e).members) rows[static_cast<std::size_t>(v)].push_back({static_cast<int>(e), Rational(1)});
  for (auto& row : rows)
    if (!row.empty()) lp.add_constraint(std::move(row), Relation::LessEqual, Rational(b));
  return lp;
}

LpSolution solve_domination(const Graph& g, int r, NumericMode mode) {
  auto blp = domination_lp(g, r);
  return blp.to_vertices(solve(blp.lp, mode));
}

LpSolution solve_independence(const Graph& g, int r, NumericMode mode) {
  auto blp = independence_lp(g, r);
  return blp.to_vertices(solve(blp.lp, mode));
}

}  // namespace distdom
