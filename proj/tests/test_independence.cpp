#include <doctest.h>

#include "distdom/domination.hpp"
#include "distdom/error.hpp"
#include "distdom/independence.hpp"
#include "distdom/instances.hpp"
#include "distdom/oracles.hpp"
#include "support.hpp"

using namespace distdom;

namespace {

Hypergraph triangle() { return Hypergraph(3, {{0, {0, 1}}, {1, {0, 2}}, {2, {1, 2}}}); }

LpSolution float_point(std::vector<double> values) {
  LpSolution s;
  s.status = LpStatus::Optimal;
  s.values = std::move(values);
  return s;
}

Hypergraph random_hypergraph(int nv, int ne, int max_size, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<HyperEdge> edges;
  for (int e = 0; e < ne; ++e) {
    std::vector<Vertex> members;
    const int size = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_size)));
    for (int i = 0; i < size; ++i) members.push_back(static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(nv))));
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    edges.push_back({e, members});
  }
  return Hypergraph(nv, edges);
}

}  // namespace

TEST_CASE("inneighbor hypergraphs") {
  auto empty = Graph::from_edges(4, {});
  auto h0 = inneighbor_hypergraph(augment_from_ordering(empty, Ordering::identity(4), 1));
  CHECK(h0.edge_count() == 4);
  for (const auto& e : h0.edges()) CHECK(e.members == std::vector<Vertex>{e.label});

  auto p = path_graph(3);
  auto h = inneighbor_hypergraph(augment_from_ordering(p, Ordering::identity(3), 1));
  CHECK(h.edge(static_cast<std::size_t>(h.index_of_label(0))).members == std::vector<Vertex>{0});
  CHECK(h.edge(static_cast<std::size_t>(h.index_of_label(1))).members == std::vector<Vertex>{0, 1});
  CHECK(h.edge(static_cast<std::size_t>(h.index_of_label(2))).members == std::vector<Vertex>{1, 2});

  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto g = testing::random_graph(15, 0.2, seed);
    for (int r = 1; r <= 3; ++r) {
      auto aug = augment_from_ordering(g, heuristic_ordering(g, OrderingStrategy::Degeneracy), r);
      CHECK(static_cast<int>(inneighbor_hypergraph(aug).max_edge_size()) == indegree_profile(aug).delta_at(r));
    }
  }
}

TEST_CASE("k-matching extraction") {
  Hypergraph single(1, {{0, {0}}});
  auto m = extract_kmatching(single, 1, float_point({1.0}), MatchingStrategy::Threshold);
  CHECK(m.selected == std::vector<int>{0});

  auto t = triangle();
  auto all = extract_kmatching(t, 2, float_point({0.5, 0.5, 0.5}), MatchingStrategy::Threshold);
  CHECK(all.selected == std::vector<int>{0, 1, 2});
  CHECK(is_b_matching(t, all));
  auto one = extract_kmatching(t, 1, float_point({0.5, 0.5, 0.5}), MatchingStrategy::Threshold);
  CHECK(one.selected.empty());
  auto greedy = extract_kmatching(t, 1, float_point({0.5, 0.5, 0.5}), MatchingStrategy::ThresholdGreedy);
  CHECK(greedy.selected.size() == 1);

  CHECK_THROWS_AS(extract_kmatching(t, 0, float_point({0.5, 0.5, 0.5}), MatchingStrategy::Threshold), InputError);
  CHECK_THROWS_AS(extract_kmatching(t, 1, float_point({0.5}), MatchingStrategy::Threshold), InputError);

  std::vector<HyperEdge> many;
  for (int e = 0; e < 61; ++e) many.push_back({e, {e % 7}});
  Hypergraph big(7, many);
  CHECK_THROWS_AS(maximum_bmatching(big, 1), BudgetExceeded);
  MatchingLimits tiny;
  tiny.max_nodes = 3;
  CHECK_THROWS_AS(maximum_bmatching(random_hypergraph(10, 30, 4, 1), 2, tiny), BudgetExceeded);

  CHECK_FALSE(is_b_matching(t, BMatching{{0, 1}, 1}));
  CHECK(is_b_matching(t, BMatching{{0, 1}, 2}));
  CHECK_FALSE(is_b_matching(t, BMatching{{9}, 3}));
  CHECK(parse_matching_strategy("greedy") == MatchingStrategy::ThresholdGreedy);
  CHECK(to_string(parse_matching_strategy("exact")) == "exact");
  CHECK_THROWS_AS(parse_matching_strategy("magic"), InputError);
}

TEST_CASE("exact b-matching agrees with the oracle and meets the LP bound") {
  CHECK(maximum_bmatching(triangle(), 1).selected.size() == 1);
  CHECK(maximum_bmatching(triangle(), 2).selected.size() == 3);
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    auto h = random_hypergraph(9, 12, 4, seed);
    for (int b = 1; b <= 3; ++b) {
      auto exact = maximum_bmatching(h, b);
      CHECK(is_b_matching(h, exact));
      const auto oracle = brute_bmatching(h, b);
      CHECK(exact.selected.size() == oracle.selected.size());
      auto mu_star = solve(bmatching_lp(h, b), NumericMode::Exact).exact_objective;
      CHECK(Rational(static_cast<long>(exact.selected.size())) <= mu_star);
    }
    auto m1 = solve(bmatching_lp(h, 1), NumericMode::Exact);
    const int k = static_cast<int>(h.max_edge_size());
    auto mk = extract_kmatching(h, k, m1, MatchingStrategy::Exact);
    CHECK(2 * static_cast<long>(mk.selected.size()) >= m1.exact_objective);
    for (auto s : {MatchingStrategy::Threshold, MatchingStrategy::ThresholdGreedy})
      CHECK(is_b_matching(h, extract_kmatching(h, k, m1, s)));
  }
}

TEST_CASE("out-bounded sets") {
  auto empty = Graph::from_edges(5, {});
  auto aug0 = augment_from_ordering(empty, Ordering::identity(5), 1);
  auto y0 = out_bounded_set(empty, aug0, MatchingStrategy::Exact, NumericMode::Exact);
  CHECK(y0.y.size() == 5);
  for (int c : y0.out_counts) CHECK(c == 1);

  auto k4 = build_h_r(clique_hypergraph(4), 1);
  auto augk = augment_from_ordering(k4.graph, canonical_ordering(k4), 1);
  auto yk = out_bounded_set(k4.graph, augk, MatchingStrategy::Exact, NumericMode::Exact);
  auto alpha = solve_independence(k4.graph, 1, NumericMode::Exact).exact_objective;
  CHECK(yk.y.size() >= 1);
  CHECK(2 * static_cast<long>(yk.y.size()) >= alpha);

  auto c5 = cycle_graph(5);
  std::vector<Edge> cyclic;
  for (int i = 0; i < 5; ++i) cyclic.emplace_back(i, (i + 1) % 5);
  auto yc = out_bounded_set(c5, orientation_augmentation(c5, cyclic), MatchingStrategy::Exact, NumericMode::Exact);
  CHECK(yc.k == 2);
  CHECK(yc.y.size() >= 1);
  CHECK(yc.packing.exact_objective == make_rational(5, 3));
}

TEST_CASE("the independence pipeline on random graphs") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    auto g = testing::random_graph(12, 0.25, seed);
    for (int r = 1; r <= 2; ++r) {
      auto order = heuristic_ordering(g, OrderingStrategy::Degeneracy);
      auto aug = augment_from_ordering(g, order, r);
      auto aug2r = augment_from_ordering(g, order, 2 * r);
      const auto prof = indegree_profile(aug);
      const auto b = guarantee_factor(prof, r).a;
      for (auto s : {MatchingStrategy::Threshold, MatchingStrategy::ThresholdGreedy, MatchingStrategy::Exact}) {
        auto out = out_bounded_set(g, aug, s, NumericMode::Exact);
        CHECK(out.k == prof.delta_at(r));
        for (int c : out.out_counts) CHECK(c <= out.k);
        if (s == MatchingStrategy::Exact) CHECK(2 * static_cast<long>(out.y.size()) >= out.packing.exact_objective);
        auto cert = certify_2rb_independent(g, out.y, r, b);
        CHECK(cert.ok);
        CHECK(cert.count <= b);
        CHECK(static_cast<int>(out.y.size()) <= brute_alpha_2rb(g, r, static_cast<int>(b)).value);

        auto sp = sparsify_to_independent(g, aug2r, out.y, b);
        CHECK(is_2r_independent(g, sp.y1, r));
        CHECK(sp.d == b * indegree_profile(aug2r).delta_at(2 * r));
        CHECK(2 * sp.d * static_cast<std::int64_t>(sp.y1.size()) >= static_cast<std::int64_t>(out.y.size()));
        CHECK(static_cast<int>(sp.y1.size()) <= brute_alpha_2r(g, r).value);
        for (Vertex v : sp.y1) CHECK(out.y.contains(v));

        // Orientation covers every conflict pair; indegrees stay below d.
        auto arcs = conflict_orientation(g, aug2r, out.y);
        std::vector<int> indeg(static_cast<std::size_t>(g.n()), 0);
        for (auto [t, h] : arcs) {
          CHECK(distance(g, t, h) <= 2 * r);
          ++indeg[static_cast<std::size_t>(h)];
        }
        for (Vertex u : out.y)
          for (Vertex w : out.y)
            if (u < w && distance(g, u, w) <= 2 * r)
              CHECK(std::find_if(arcs.begin(), arcs.end(), [&](const Edge& e) {
                      return (e.first == u && e.second == w) || (e.first == w && e.second == u);
                    }) != arcs.end());
        for (int c : indeg) CHECK(c < sp.d);
      }
    }
  }
}

TEST_CASE("certificates and sparsification edge cases") {
  auto g = path_graph(5);
  CHECK(certify_2rb_independent(g, VertexSet{}, 1, 0).ok);
  CHECK(certify_2rb_independent(g, VertexSet{2}, 1, 1).ok);
  auto c = certify_2rb_independent(g, VertexSet{1, 2, 3}, 1, 2);
  CHECK_FALSE(c.ok);
  CHECK(c.count == 3);
  CHECK(c.worst_vertex == 2);

  auto aug2 = augment_from_ordering(g, Ordering::identity(5), 2);
  auto sep = sparsify_to_independent(g, aug2, VertexSet{0, 3}, 2);
  CHECK(sep.y1 == VertexSet{0, 3});
  CHECK(sep.conflict_edges == 0);
  auto close = sparsify_to_independent(g, aug2, VertexSet{1, 3}, 2);
  CHECK(close.y1 == VertexSet{1});
  CHECK_THROWS_AS(sparsify_to_independent(g, aug2, VertexSet{1, 2, 3}, 1), InputError);
  CHECK_THROWS_AS(sparsify_to_independent(g, augment_from_ordering(g, Ordering::identity(5), 1), VertexSet{1}, 1),
                  InputError);
  CHECK(bmatching_to_json(BMatching{{1, 4}, 2}).at("selected").size() == 2);
}
