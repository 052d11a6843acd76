#include "distdom/ordering.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "distdom/error.hpp"

namespace distdom {

Ordering Ordering::from_sequence(std::vector<Vertex> sequence) {
  Ordering order;
  const auto n = sequence.size();
  order.rank_.assign(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    Vertex v = sequence[i];
    if (v < 0 || static_cast<std::size_t>(v) >= n || order.rank_[static_cast<std::size_t>(v)] != -1)
      throw InputError("ordering is not a permutation of 0.." + std::to_string(n == 0 ? 0 : n - 1));
    order.rank_[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  order.sequence_ = std::move(sequence);
  return order;
}

Ordering Ordering::identity(int n) {
  std::vector<Vertex> seq(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) seq[static_cast<std::size_t>(i)] = i;
  return from_sequence(std::move(seq));
}

VertexSet WeakReachProfile::weakly_reachable(Vertex v, int k) const {
  std::vector<Vertex> out;
  for (const auto& e : reach[static_cast<std::size_t>(v)])
    if (e.radius <= k) out.push_back(e.vertex);
  return VertexSet(std::move(out));
}

WeakReachProfile weak_reach(const Graph& g, const Ordering& order, int max_k) {
  if (max_k < 0) throw InputError("weak_reach needs a non-negative radius");
  if (order.size() != g.n()) throw InputError("ordering size does not match the graph");
  const int n = g.n();
  WeakReachProfile profile;
  profile.max_k = max_k;
  profile.reach.assign(static_cast<std::size_t>(n), {});

  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> touched;
  std::deque<Vertex> queue;
  for (Vertex u = 0; u < n; ++u) {
    const int floor_rank = order.rank(u);
    dist[static_cast<std::size_t>(u)] = 0;
    touched.assign(1, u);
    queue.assign(1, u);
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      int dx = dist[static_cast<std::size_t>(x)];
      profile.reach[static_cast<std::size_t>(x)].push_back({u, dx});
      if (dx == max_k) continue;
      for (Vertex y : g.neighbors(x)) {
        if (dist[static_cast<std::size_t>(y)] >= 0 || order.rank(y) < floor_rank) continue;
        dist[static_cast<std::size_t>(y)] = dx + 1;
        touched.push_back(y);
        queue.push_back(y);
      }
    }
    for (Vertex t : touched) dist[static_cast<std::size_t>(t)] = -1;
  }
  // The outer loop runs over u in id order, so every reach list is already sorted.

  profile.counts.assign(static_cast<std::size_t>(max_k) + 1, std::vector<int>(static_cast<std::size_t>(n), 0));
  profile.wcol.assign(static_cast<std::size_t>(max_k) + 1, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (const auto& e : profile.reach[static_cast<std::size_t>(v)])
      ++profile.counts[static_cast<std::size_t>(e.radius)][static_cast<std::size_t>(v)];
    for (int k = 1; k <= max_k; ++k)
      profile.counts[static_cast<std::size_t>(k)][static_cast<std::size_t>(v)] +=
          profile.counts[static_cast<std::size_t>(k) - 1][static_cast<std::size_t>(v)];
  }
  for (int k = 0; k <= max_k; ++k) {
    const auto& row = profile.counts[static_cast<std::size_t>(k)];
    profile.wcol[static_cast<std::size_t>(k)] = row.empty() ? 0 : *std::max_element(row.begin(), row.end());
  }
  return profile;
}

int wcol_of_ordering(const Graph& g, const Ordering& order, int k) {
  if (k < 0) throw InputError("wcol radius must be non-negative");
  return weak_reach(g, order, k).wcol[static_cast<std::size_t>(k)];
}

OrderingStrategy parse_ordering_strategy(const std::string& name) {
  if (name == "degeneracy") return OrderingStrategy::Degeneracy;
  if (name == "descending-degree") return OrderingStrategy::DescendingDegree;
  if (name == "input-order" || name == "input") return OrderingStrategy::InputOrder;
  throw InputError("unknown ordering strategy '" + name + "'");
}

std::string to_string(OrderingStrategy strategy) {
  switch (strategy) {
    case OrderingStrategy::Degeneracy: return "degeneracy";
    case OrderingStrategy::DescendingDegree: return "descending-degree";
    case OrderingStrategy::InputOrder: return "input-order";
  }
  return "?";
}

std::pair<std::vector<Vertex>, int> smallest_last_peeling(const Graph& g) {
  const int n = g.n();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::set<std::pair<int, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = g.degree(v);
    queue.emplace(deg[static_cast<std::size_t>(v)], v);
  }
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> peeled;
  peeled.reserve(static_cast<std::size_t>(n));
  int degen = 0;
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    degen = std::max(degen, d);
    removed[static_cast<std::size_t>(v)] = 1;
    peeled.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (removed[static_cast<std::size_t>(w)]) continue;
      auto& dw = deg[static_cast<std::size_t>(w)];
      queue.erase({dw, w});
      --dw;
      queue.emplace(dw, w);
    }
  }
  return {std::move(peeled), degen};
}

int degeneracy(const Graph& g) { return smallest_last_peeling(g).second; }

Ordering heuristic_ordering(const Graph& g, OrderingStrategy strategy) {
  switch (strategy) {
    case OrderingStrategy::Degeneracy: {
      auto seq = smallest_last_peeling(g).first;
      std::reverse(seq.begin(), seq.end());
      return Ordering::from_sequence(std::move(seq));
    }
    case OrderingStrategy::DescendingDegree: {
      std::vector<Vertex> seq(static_cast<std::size_t>(g.n()));
      for (Vertex v = 0; v < g.n(); ++v) seq[static_cast<std::size_t>(v)] = v;
      std::stable_sort(seq.begin(), seq.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
      return Ordering::from_sequence(std::move(seq));
    }
    case OrderingStrategy::InputOrder:
      return Ordering::identity(g.n());
  }
  throw InputError("unknown ordering strategy");
}

nlohmann::json ordering_to_json(const Ordering& order) { return order.sequence(); }

Ordering ordering_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InputError("ordering JSON must be an array of vertex ids");
  return Ordering::from_sequence(j.get<std::vector<Vertex>>());
}

}  // namespace distdom
