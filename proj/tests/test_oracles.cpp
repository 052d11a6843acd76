#include <doctest.h>

#include <cstdlib>

#include "distdom/error.hpp"
#include "distdom/independence.hpp"
#include "distdom/instances.hpp"
#include "distdom/lp.hpp"
#include "distdom/oracles.hpp"
#include "support.hpp"

using namespace distdom;

namespace {

// Plain exhaustive references over all subsets (n small).
int subsets_gamma(const Graph& g, int r) {
  const int n = g.n();
  int best = n;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<Vertex> members;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1u) members.push_back(v);
    if (static_cast<int>(members.size()) < best && is_r_dominating(g, VertexSet(members), r))
      best = static_cast<int>(members.size());
  }
  return best;
}

int subsets_alpha_2rb(const Graph& g, int r, int b) {
  const int n = g.n();
  BallTable balls(g, r);
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) {
      int c = 0;
      for (Vertex w : balls.ball(v)) c += (mask >> w) & 1u;
      ok = c <= b;
    }
    if (ok) best = size;
  }
  return best;
}

Hypergraph triangle() { return Hypergraph(3, {{0, {0, 1}}, {1, {0, 2}}, {2, {1, 2}}}); }

}  // namespace

TEST_CASE("gamma oracle") {
  CHECK(brute_gamma_r(Graph::from_edges(1, {}), 1).value == 1);
  auto c5 = brute_gamma_r(cycle_graph(5), 1);
  CHECK(c5.value == 2);
  CHECK(is_r_dominating(cycle_graph(5), c5.witness, 1));
  CHECK(brute_gamma_r(Graph::from_edges(0, {}), 1).value == 0);

  auto cov = build_h_r(covering_hard_hypergraph(5), 1);
  OracleBudget big;
  big.max_vertices = 20;
  CHECK(brute_gamma_r(cov.graph, 1, big).value >= 3);
  CHECK_FALSE(find_r_dominating_set(cov.graph, 1, 2));
  auto three = find_r_dominating_set(cov.graph, 1, 3);
  REQUIRE(three);
  CHECK(is_r_dominating(cov.graph, *three, 1));

  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto g = testing::random_graph(11, 0.2, seed);
    for (int r = 1; r <= 2; ++r) {
      auto w = brute_gamma_r(g, r);
      CHECK(w.value == subsets_gamma(g, r));
      CHECK(static_cast<int>(w.witness.size()) == w.value);
      CHECK(is_r_dominating(g, w.witness, r));
      auto lb = gamma_lower_bound(g, r);
      REQUIRE(lb.optimum);
      CHECK(static_cast<int>(lb.optimum->size()) == w.value);
      CHECK(is_r_dominating(g, *lb.optimum, r));
      CHECK(lb.lower == w.value);
    }
  }
}

TEST_CASE("independence oracles") {
  CHECK(brute_alpha_2r(Graph::from_edges(6, {}), 2).value == 6);
  CHECK(brute_alpha_2r(path_graph(5), 1).value == 2);
  auto k4 = build_h_r(clique_hypergraph(4), 1);
  auto a = brute_alpha_2r(k4.graph, 1);
  CHECK(a.value == 2);
  CHECK(is_2r_independent(k4.graph, a.witness, 1));
  CHECK(brute_alpha_2rb(cycle_graph(6), 1, 2).value == 4);

  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    auto g = testing::random_graph(11, 0.25, seed);
    for (int r = 1; r <= 2; ++r) {
      CHECK(brute_alpha_2rb(g, r, 1).value == brute_alpha_2r(g, r).value);
      int max_ball = 0;
      for (Vertex v = 0; v < g.n(); ++v) max_ball = std::max(max_ball, static_cast<int>(ball(g, v, r).size()));
      CHECK(brute_alpha_2rb(g, r, max_ball).value == g.n());
      for (int b = 1; b <= 3; ++b) {
        auto w = brute_alpha_2rb(g, r, b);
        CHECK(w.value == subsets_alpha_2rb(g, r, b));
        CHECK(static_cast<int>(w.witness.size()) == w.value);
      }
    }
  }
}

TEST_CASE("observation chain on small graphs") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto g = testing::random_graph(12, 0.2, seed);
    for (int r = 1; r <= 3; ++r) {
      auto lp = solve_domination(g, r, NumericMode::Exact).exact_objective;
      CHECK(Rational(brute_alpha_2r(g, r).value) <= lp);
      CHECK(lp <= Rational(brute_gamma_r(g, r).value));
      for (int b = 1; b <= 3; ++b) CHECK(Rational(brute_alpha_2rb(g, r, b).value) <= b * lp);
    }
  }
}

TEST_CASE("wcol oracle") {
  for (int n = 1; n <= 6; ++n) CHECK(brute_wcol(complete_graph(n), 1).value == n);
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    auto inst = random_degenerate(10, 1, seed);
    CHECK(brute_wcol(inst.graph, 1).value == (inst.graph.m() > 0 ? 2 : 1));
  }
  auto c5 = cycle_graph(5);
  auto w = brute_wcol(c5, 2);
  CHECK(w.value == testing::min_wcol_all_permutations(c5, 2));
  CHECK(wcol_of_ordering(c5, w.ordering, 2) == w.value);
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    auto g = testing::random_graph(7, 0.4, seed);
    for (int k = 1; k <= 3; ++k) {
      auto ww = brute_wcol(g, k);
      CHECK(ww.value == testing::min_wcol_all_permutations(g, k));
      CHECK(testing::definitional_wcol(g, ww.ordering, k) == ww.value);
    }
  }
}

TEST_CASE("b-matching oracle") {
  CHECK(brute_bmatching(Hypergraph(1, {{0, {0}}}), 1).selected.size() == 1);
  CHECK(brute_bmatching(triangle(), 1).selected.size() == 1);
  CHECK(brute_bmatching(triangle(), 2).selected.size() == 3);
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<HyperEdge> edges;
    for (int e = 0; e < 8; ++e) {
      std::vector<Vertex> m{static_cast<Vertex>(rng.below(6)), static_cast<Vertex>(rng.below(6))};
      std::sort(m.begin(), m.end());
      m.erase(std::unique(m.begin(), m.end()), m.end());
      edges.push_back({e, m});
    }
    Hypergraph h(6, edges);
    for (int b = 1; b <= 3; ++b) {
      auto best = brute_bmatching(h, b);
      CHECK(is_b_matching(h, best));
      CHECK(solve(bmatching_lp(h, b), NumericMode::Exact).exact_objective >=
            Rational(static_cast<long>(best.selected.size())));
    }
  }
}

TEST_CASE("budgets refuse explicitly") {
  OracleBudget small;
  small.max_vertices = 5;
  auto g = cycle_graph(6);
  CHECK_THROWS_AS(brute_gamma_r(g, 1, small), BudgetExceeded);
  CHECK_THROWS_AS(brute_alpha_2r(g, 1, small), BudgetExceeded);
  CHECK_THROWS_AS(brute_alpha_2rb(g, 1, 2, small), BudgetExceeded);
  CHECK_THROWS_AS(brute_wcol(g, 1, small), BudgetExceeded);
  std::vector<HyperEdge> edges;
  for (int e = 0; e < 6; ++e) edges.push_back({e, {e}});
  CHECK_THROWS_AS(brute_bmatching(Hypergraph(6, edges), 1, small), BudgetExceeded);
  CHECK(small.admits(5));
  CHECK_FALSE(small.admits(6));

  OracleBudget nodes;
  nodes.max_nodes = 10;
  auto lb = gamma_lower_bound(build_h_r(covering_hard_hypergraph(5), 1).graph, 1, nodes);
  CHECK_FALSE(lb.optimum);
  CHECK(lb.lower >= 1);

  ::setenv("DISTDOM_BUDGET_VERTICES", "9", 1);
  CHECK(OracleBudget::from_env().max_vertices == 9);
  ::setenv("DISTDOM_BUDGET_VERTICES", "nine", 1);
  CHECK_THROWS_AS(OracleBudget::from_env(), InputError);
  ::unsetenv("DISTDOM_BUDGET_VERTICES");
  CHECK(OracleBudget::from_env().max_vertices == 14);
}
