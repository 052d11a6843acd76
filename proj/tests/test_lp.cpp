#include <doctest.h>

#include "distdom/augmentation.hpp"
#include "distdom/error.hpp"
#include "distdom/instances.hpp"
#include "distdom/lp.hpp"
#include "support.hpp"

using namespace distdom;

namespace {

Hypergraph triangle() { return Hypergraph(3, {{0, {0, 1}}, {1, {0, 2}}, {2, {1, 2}}}); }

Rational q(long num, long den = 1) { return make_rational(num, den); }

}  // namespace

TEST_CASE("tiny programs in both modes") {
  LinearProgram lp(Sense::Maximize, 1);
  lp.objective[0] = 1;
  lp.add_constraint({{0, 1}}, Relation::LessEqual, 1);
  auto ex = solve(lp, NumericMode::Exact);
  REQUIRE(ex.optimal());
  CHECK(ex.exact_objective == 1);
  auto fl = solve(lp, NumericMode::Float);
  CHECK(fl.objective == doctest::Approx(1.0));

  auto one = solve_domination(Graph::from_edges(1, {}), 3, NumericMode::Exact);
  CHECK(one.exact_objective == 1);
}

TEST_CASE("infeasible and unbounded are statuses") {
  LinearProgram bad(Sense::Minimize, 1);
  bad.objective[0] = 1;
  bad.add_constraint({{0, 1}}, Relation::LessEqual, 1);
  bad.add_constraint({{0, 1}}, Relation::GreaterEqual, 2);
  for (auto mode : {NumericMode::Exact, NumericMode::Float}) CHECK(solve(bad, mode).status == LpStatus::Infeasible);

  LinearProgram open(Sense::Maximize, 2);
  open.objective = {1, 1};
  open.add_constraint({{0, 1}, {1, -1}}, Relation::LessEqual, 1);
  for (auto mode : {NumericMode::Exact, NumericMode::Float}) CHECK(solve(open, mode).status == LpStatus::Unbounded);

  LinearProgram eq(Sense::Minimize, 2);
  eq.objective = {2, 3};
  eq.add_constraint({{0, 1}, {1, 1}}, Relation::Equal, 4);
  eq.bounds[0].upper = q(3, 2);
  auto s = solve(eq, NumericMode::Exact);
  REQUIRE(s.optimal());
  CHECK(s.exact_objective == q(21, 2));
  CHECK(is_feasible(eq, s));

  LinearProgram broken(Sense::Minimize, 1);
  broken.add_constraint({{3, 1}}, Relation::LessEqual, 1);
  CHECK_THROWS_AS(solve(broken, NumericMode::Exact), InputError);
}

TEST_CASE("fractional matchings of the triangle hypergraph") {
  auto h = triangle();
  auto m1 = solve(bmatching_lp(h, 1), NumericMode::Exact);
  CHECK(m1.exact_objective == q(3, 2));
  auto m2 = solve(bmatching_lp(h, 2), NumericMode::Exact);
  CHECK(m2.exact_objective == 3);
  Hypergraph single(1, {{0, {0}}});
  CHECK(solve(bmatching_lp(single, 1), NumericMode::Exact).exact_objective == 1);
  CHECK(bmatching_lp(h, 1).num_vars() == 3);
  CHECK(bmatching_lp(h, 1).constraints.size() == 3);
}

TEST_CASE("ball LPs on known graphs") {
  auto c5 = cycle_graph(5);
  CHECK(solve_domination(c5, 1, NumericMode::Exact).exact_objective == q(5, 3));
  CHECK(solve_independence(c5, 1, NumericMode::Exact).exact_objective == q(5, 3));
  for (int n = 1; n <= 6; ++n) CHECK(solve_domination(complete_graph(n), 1, NumericMode::Exact).exact_objective == 1);
  for (int r = 1; r <= 3; ++r)
    CHECK(solve_independence(Graph::from_edges(7, {}), r, NumericMode::Exact).exact_objective == 7);

  auto dom = domination_lp(c5, 1, false);
  CHECK(dom.lp.num_vars() == 5);
  CHECK(dom.lp.constraints.size() == 5);
  for (const auto& row : dom.lp.constraints) CHECK(row.terms.size() == 3);

  auto text = dump_lp(dom.lp);
  CHECK(text.rfind("min:", 0) == 0);
  CHECK(text.find(">= 1") != std::string::npos);
}

TEST_CASE("dedupe keeps the optimum and per-vertex feasibility") {
  // Every ball of K_n is V: one column.
  auto k5 = complete_graph(5);
  auto lp = domination_lp(k5, 1, true);
  CHECK(lp.lp.num_vars() == 1);
  auto sol = lp.to_vertices(solve(lp.lp, NumericMode::Exact));
  CHECK(sol.size() == 5);
  CHECK(sol.exact_values[0] == 1);
  for (std::size_t i = 1; i < 5; ++i) CHECK(sol.exact_values[i] == 0);
  CHECK(is_feasible(domination_lp(k5, 1, false).lp, sol));

  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    auto g = testing::random_graph(11, 0.3, seed);
    for (int r = 1; r <= 2; ++r) {
      auto a = solve(domination_lp(g, r, false).lp, NumericMode::Exact);
      auto b = solve_domination(g, r, NumericMode::Exact);
      CHECK(a.exact_objective == b.exact_objective);
      CHECK(is_feasible(domination_lp(g, r, false).lp, b));
      CHECK(is_feasible(independence_lp(g, r, false).lp, solve_independence(g, r, NumericMode::Exact)));
    }
  }
}

TEST_CASE("strong duality and float agreement on random graphs") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    auto g = testing::random_graph(14, 0.2, seed);
    for (int r = 1; r <= 3; ++r) {
      auto gd = solve_domination(g, r, NumericMode::Exact);
      auto ai = solve_independence(g, r, NumericMode::Exact);
      CHECK(gd.exact_objective == ai.exact_objective);
      auto fd = solve_domination(g, r, NumericMode::Float);
      auto fi = solve_independence(g, r, NumericMode::Float);
      CHECK(std::abs(fd.objective - fi.objective) <= 1e-6);
      CHECK(std::abs(fd.objective - gd.exact_objective.get_d()) <= 1e-6);
      CHECK(is_feasible(domination_lp(g, r, false).lp, fd));
    }
  }
}

TEST_CASE("scaling a fractional matching by k stays feasible for b = k") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    auto g = testing::random_graph(12, 0.3, seed);
    auto aug = augment_from_ordering(g, heuristic_ordering(g, OrderingStrategy::Degeneracy), 1);
    std::vector<HyperEdge> edges;
    for (Vertex u = 0; u < g.n(); ++u) {
      HyperEdge e{u, {}};
      for (auto in : aug.in_arcs(u)) e.members.push_back(in.tail);
      std::sort(e.members.begin(), e.members.end());
      edges.push_back(std::move(e));
    }
    Hypergraph h(g.n(), edges);
    auto m = solve(bmatching_lp(h, 1), NumericMode::Exact);
    const int k = 3;
    LpSolution scaled = m;
    for (auto& v : scaled.exact_values)
      if (v <= q(1, k)) v *= k;
    for (std::size_t i = 0; i < scaled.values.size(); ++i) scaled.values[i] = scaled.exact_values[i].get_d();
    CHECK(is_feasible(bmatching_lp(h, k), scaled));
  }
}

TEST_CASE("K_n^(r) LP values sit in [n/2, n/2 + 1]") {
  for (int n = 3; n <= 5; ++n)
    for (int r = 1; r <= 2; ++r) {
      auto c = build_h_r(clique_hypergraph(n), r);
      auto v = solve_domination(c.graph, r, NumericMode::Exact).exact_objective;
      CHECK(v >= q(n, 2));
      CHECK(v <= q(n, 2) + 1);
      // y = 1/2 on the hyper-vertices is a feasible packing.
      auto pack = independence_lp(c.graph, r, false);
      LpSolution y;
      y.status = LpStatus::Optimal;
      y.mode = NumericMode::Exact;
      y.exact_values.assign(static_cast<std::size_t>(c.graph.n()), 0);
      for (Vertex w : c.with_role(Role::HyperVertex)) y.exact_values[static_cast<std::size_t>(w)] = q(1, 2);
      y.values.assign(y.exact_values.size(), 0);
      for (std::size_t i = 0; i < y.values.size(); ++i) y.values[i] = y.exact_values[i].get_d();
      CHECK(is_feasible(pack.lp, y));
    }
}

TEST_CASE("float mode stays on track through long degenerate runs") {
  // These needed hundreds of degenerate pivots and used to drift in double.
  std::vector<std::pair<Graph, int>> cases = {{build_h_r(clique_hypergraph(5), 2).graph, 2},
                                              {random_degenerate(60, 3, 7014).graph, 1},
                                              {random_degenerate(40, 2, 7010).graph, 2}};
  for (const auto& [g, r] : cases) {
    auto ex = solve_domination(g, r, NumericMode::Exact);
    auto fl = solve_domination(g, r, NumericMode::Float);
    REQUIRE(fl.optimal());
    CHECK(std::abs(fl.objective - ex.exact_objective.get_d()) <= 1e-6);
    CHECK(is_feasible(domination_lp(g, r, false).lp, fl));
  }
}
