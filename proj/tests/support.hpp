#pragma once

// Independent reference computations used only by the tests.

#include <algorithm>
#include <climits>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "distdom/graph.hpp"
#include "distdom/ordering.hpp"
#include "distdom/random.hpp"

namespace testing {

using distdom::Edge;
using distdom::Graph;
using distdom::Ordering;
using distdom::Vertex;

inline constexpr int kInf = INT_MAX / 4;

// All-pairs distances by Floyd-Warshall.
inline std::vector<std::vector<int>> all_pairs(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.n());
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (std::size_t v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (Vertex w : g.neighbors(static_cast<Vertex>(v))) d[v][static_cast<std::size_t>(w)] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

// Q_k(v) straight from the definition: enumerate every simple path of
// length <= k starting at v and keep the endpoint u when no vertex on the
// path ranks below u.
inline std::set<Vertex> definitional_q(const Graph& g, const Ordering& ord, Vertex v, int k) {
  std::set<Vertex> out;
  std::vector<Vertex> path{v};
  std::vector<char> on(static_cast<std::size_t>(g.n()), 0);
  on[static_cast<std::size_t>(v)] = 1;
  std::function<void()> dfs = [&] {
    Vertex u = path.back();
    int low = INT_MAX;
    for (Vertex w : path) low = std::min(low, ord.rank(w));
    if (low == ord.rank(u)) out.insert(u);
    if (static_cast<int>(path.size()) - 1 == k) return;
    for (Vertex w : g.neighbors(u)) {
      if (on[static_cast<std::size_t>(w)]) continue;
      on[static_cast<std::size_t>(w)] = 1;
      path.push_back(w);
      dfs();
      path.pop_back();
      on[static_cast<std::size_t>(w)] = 0;
    }
  };
  dfs();
  return out;
}

inline int definitional_wcol(const Graph& g, const Ordering& ord, int k) {
  int best = 0;
  for (Vertex v = 0; v < g.n(); ++v) best = std::max(best, static_cast<int>(definitional_q(g, ord, v, k).size()));
  return best;
}

// Minimum over all n! orderings.
inline int min_wcol_all_permutations(const Graph& g, int k) {
  std::vector<Vertex> seq(static_cast<std::size_t>(g.n()));
  std::iota(seq.begin(), seq.end(), 0);
  int best = INT_MAX;
  do best = std::min(best, definitional_wcol(g, Ordering::from_sequence(seq), k));
  while (std::next_permutation(seq.begin(), seq.end()));
  return best;
}

inline Graph random_graph(int n, double p, std::uint64_t seed) {
  distdom::Rng rng(seed);
  std::vector<Edge> edges;
  const auto scale = std::uint64_t{1} << 30;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (static_cast<double>(rng.below(scale)) < p * static_cast<double>(scale)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

// Every subset of {0..n-1} of the given size, in lexicographic order.
inline void for_each_subset(int n, int size, const std::function<void(const std::vector<Vertex>&)>& f) {
  std::vector<Vertex> pick;
  std::function<void(Vertex)> rec = [&](Vertex from) {
    if (static_cast<int>(pick.size()) == size) {
      f(pick);
      return;
    }
    for (Vertex v = from; v < n; ++v) {
      pick.push_back(v);
      rec(v + 1);
      pick.pop_back();
    }
  };
  rec(0);
}

}  // namespace testing
