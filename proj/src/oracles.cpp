#include "distdom/oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "distdom/error.hpp"

namespace distdom {

OracleBudget OracleBudget::from_env() {
  OracleBudget b;
  if (const char* env = std::getenv("DISTDOM_BUDGET_VERTICES")) {
    try {
      b.max_vertices = std::stoi(env);
    } catch (const std::exception&) {
      throw InputError(std::string("DISTDOM_BUDGET_VERTICES is not an integer: ") + env);
    }
  }
  return b;
}

namespace {

void require(const OracleBudget& budget, int n, const char* what) {
  if (!budget.admits(n))
    throw BudgetExceeded(std::string(what) + ": " + std::to_string(n) + " exceeds the oracle budget of " +
                         std::to_string(budget.max_vertices));
}

struct NodeCounter {
  std::uint64_t limit;
  std::uint64_t used = 0;
  void tick() {
    if (++used > limit) throw BudgetExceeded("oracle search exceeded " + std::to_string(limit) + " nodes");
  }
};

class DominationSearch {
 public:
  DominationSearch(const Graph& g, int r, std::uint64_t max_nodes)
      : n_(g.n()), balls_(g, r), cover_(static_cast<std::size_t>(g.n()), 0), nodes_{max_nodes} {}

  bool run(int max_size) {
    chosen_.clear();
    std::fill(cover_.begin(), cover_.end(), 0);
    return dfs(max_size);
  }
  VertexSet witness() const { return VertexSet(chosen_); }

 private:
  bool dfs(int left) {
    nodes_.tick();
    Vertex u = 0;
    while (u < n_ && cover_[static_cast<std::size_t>(u)] > 0) ++u;
    if (u == n_) return true;
    if (left == 0) return false;
    // Some member of N_r[u] must be chosen.
    for (Vertex v : balls_.ball(u)) {
      chosen_.push_back(v);
      for (Vertex w : balls_.ball(v)) ++cover_[static_cast<std::size_t>(w)];
      bool found = dfs(left - 1);
      if (found) return true;
      for (Vertex w : balls_.ball(v)) --cover_[static_cast<std::size_t>(w)];
      chosen_.pop_back();
    }
    return false;
  }

  int n_;
  BallTable balls_;
  std::vector<int> cover_;
  std::vector<Vertex> chosen_;
  NodeCounter nodes_;
};

}  // namespace

std::optional<VertexSet> find_r_dominating_set(const Graph& g, int r, int max_size, const OracleBudget& budget) {
  if (r < 0) throw InputError("radius must be non-negative");
  if (max_size > budget.max_subset_size) throw BudgetExceeded("subset size exceeds the oracle budget");
  DominationSearch search(g, r, budget.max_nodes);
  // Iterative deepening returns a smallest set when one exists.
  for (int s = 0; s <= max_size; ++s)
    if (search.run(s)) return search.witness();
  return std::nullopt;
}

GammaBound gamma_lower_bound(const Graph& g, int r, const OracleBudget& budget) {
  GammaBound out;
  DominationSearch search(g, r, budget.max_nodes);
  try {
    for (int s = 0; s <= std::min(g.n(), budget.max_subset_size); ++s) {
      if (search.run(s)) {
        out.lower = s;
        out.optimum = search.witness();
        return out;
      }
      out.lower = s + 1;
    }
  } catch (const BudgetExceeded&) {
    // Keep the bound proven so far.
  }
  return out;
}

SetWitness brute_gamma_r(const Graph& g, int r, const OracleBudget& budget) {
  require(budget, g.n(), "gamma oracle");
  auto set = find_r_dominating_set(g, r, std::min(g.n(), budget.max_subset_size), budget);
  if (!set) throw Error("no dominating set found within the subset-size budget");
  return {static_cast<int>(set->size()), *set};
}

namespace {

class IndependentSetSearch {
 public:
  IndependentSetSearch(const Graph& conflict, std::uint64_t max_nodes) : g_(conflict), nodes_{max_nodes} {}

  std::vector<Vertex> run() {
    std::vector<Vertex> all(static_cast<std::size_t>(g_.n()));
    for (Vertex v = 0; v < g_.n(); ++v) all[static_cast<std::size_t>(v)] = v;
    dfs(all);
    return best_;
  }

 private:
  void dfs(const std::vector<Vertex>& cand) {
    nodes_.tick();
    if (cur_.size() > best_.size()) best_ = cur_;
    if (cur_.size() + cand.size() <= best_.size()) return;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (cur_.size() + (cand.size() - i) <= best_.size()) return;
      Vertex v = cand[i];
      std::vector<Vertex> next;
      for (std::size_t j = i + 1; j < cand.size(); ++j)
        if (!g_.adjacent(v, cand[j])) next.push_back(cand[j]);
      cur_.push_back(v);
      dfs(next);
      cur_.pop_back();
    }
  }

  const Graph& g_;
  NodeCounter nodes_;
  std::vector<Vertex> cur_, best_;
};

}  // namespace

SetWitness brute_alpha_2r(const Graph& g, int r, const OracleBudget& budget) {
  require(budget, g.n(), "alpha oracle");
  std::vector<Edge> conflicts;
  for (Vertex u = 0; u < g.n(); ++u) {
    auto dist = distances_from(g, u, 2 * r);
    for (Vertex v = u + 1; v < g.n(); ++v)
      if (dist[static_cast<std::size_t>(v)] <= 2 * r) conflicts.emplace_back(u, v);
  }
  auto best = IndependentSetSearch(Graph::from_edges(g.n(), conflicts), budget.max_nodes).run();
  return {static_cast<int>(best.size()), VertexSet(std::move(best))};
}

SetWitness brute_alpha_2rb(const Graph& g, int r, int b, const OracleBudget& budget) {
  require(budget, g.n(), "(2r,b)-independence oracle");
  if (b < 0) throw InputError("b must be non-negative");
  BallTable balls(g, r);
  const int n = g.n();
  std::vector<int> cap(static_cast<std::size_t>(n), b);
  std::vector<Vertex> cur, best;
  NodeCounter nodes{budget.max_nodes};
  // Include/exclude over vertex ids; u fits iff every ball containing u,
  // i.e. N_r[w] for w in N_r[u], still has room.
  auto dfs = [&](auto&& self, Vertex u) -> void {
    nodes.tick();
    if (cur.size() > best.size()) best = cur;
    if (u == n || cur.size() + static_cast<std::size_t>(n - u) <= best.size()) return;
    const auto& ball = balls.ball(u);
    bool fits = std::all_of(ball.begin(), ball.end(), [&](Vertex w) { return cap[static_cast<std::size_t>(w)] > 0; });
    if (fits) {
      for (Vertex w : ball) --cap[static_cast<std::size_t>(w)];
      cur.push_back(u);
      self(self, u + 1);
      cur.pop_back();
      for (Vertex w : ball) ++cap[static_cast<std::size_t>(w)];
    }
    self(self, u + 1);
  };
  dfs(dfs, 0);
  return {static_cast<int>(best.size()), VertexSet(std::move(best))};
}

namespace {

// Orderings are built from rank 0 upwards. Placing u next fixes exactly the
// vertices w (u itself and unplaced ones) with u in Q_k(w): those within
// distance k of u in the subgraph induced by u and the unplaced vertices.
class WcolSearch {
 public:
  WcolSearch(const Graph& g, int k, std::uint64_t max_nodes)
      : g_(g), k_(k), nodes_{max_nodes}, placed_(static_cast<std::size_t>(g.n()), 0),
        count_(static_cast<std::size_t>(g.n()), 0) {}

  WcolWitness run() {
    best_ = g_.n() + 1;
    dfs(0);
    return {best_, Ordering::from_sequence(best_seq_)};
  }

 private:
  std::vector<Vertex> reach_of(Vertex u) const {
    std::vector<int> dist(static_cast<std::size_t>(g_.n()), -1);
    std::vector<Vertex> frontier{u}, out{u};
    dist[static_cast<std::size_t>(u)] = 0;
    for (int step = 1; step <= k_ && !frontier.empty(); ++step) {
      std::vector<Vertex> next;
      for (Vertex x : frontier)
        for (Vertex y : g_.neighbors(x)) {
          auto i = static_cast<std::size_t>(y);
          if (placed_[i] || dist[i] >= 0) continue;
          dist[i] = step;
          next.push_back(y);
          out.push_back(y);
        }
      frontier = std::move(next);
    }
    return out;
  }

  void dfs(int depth) {
    nodes_.tick();
    if (depth == g_.n()) {
      int worst = 0;
      for (int c : count_) worst = std::max(worst, c);
      if (worst < best_) {
        best_ = worst;
        best_seq_ = seq_;
      }
      return;
    }
    for (Vertex u = 0; u < g_.n(); ++u) {
      if (placed_[static_cast<std::size_t>(u)]) continue;
      auto reach = reach_of(u);
      bool ok = true;
      for (Vertex w : reach)
        if (++count_[static_cast<std::size_t>(w)] >= best_) ok = false;
      if (ok) {
        placed_[static_cast<std::size_t>(u)] = 1;
        seq_.push_back(u);
        dfs(depth + 1);
        seq_.pop_back();
        placed_[static_cast<std::size_t>(u)] = 0;
      }
      for (Vertex w : reach) --count_[static_cast<std::size_t>(w)];
      if (best_ == 1) return;
    }
  }

  const Graph& g_;
  int k_;
  NodeCounter nodes_;
  std::vector<char> placed_;
  std::vector<int> count_;
  std::vector<Vertex> seq_, best_seq_;
  int best_ = 0;
};

}  // namespace

WcolWitness brute_wcol(const Graph& g, int k, const OracleBudget& budget) {
  require(budget, g.n(), "wcol oracle");
  if (k < 0) throw InputError("k must be non-negative");
  if (g.n() == 0) return {0, Ordering::identity(0)};
  return WcolSearch(g, k, budget.max_nodes).run();
}

BMatching brute_bmatching(const Hypergraph& h, int b, const OracleBudget& budget) {
  require(budget, static_cast<int>(h.edge_count()), "b-matching oracle");
  if (b < 1) throw InputError("b must be at least 1");
  const std::size_t m = h.edge_count();
  std::vector<int> load(static_cast<std::size_t>(h.nv()), 0);
  std::vector<char> cur(m, 0), best(m, 0);
  std::size_t cur_size = 0, best_size = 0;
  NodeCounter nodes{budget.max_nodes};
  auto dfs = [&](auto&& self, std::size_t e) -> void {
    nodes.tick();
    if (e == m) {
      if (cur_size > best_size) {
        best_size = cur_size;
        best = cur;
      }
      return;
    }
    const auto& members = h.edge(e).members;
    if (std::all_of(members.begin(), members.end(), [&](Vertex v) { return load[static_cast<std::size_t>(v)] < b; })) {
      for (Vertex v : members) ++load[static_cast<std::size_t>(v)];
      cur[e] = 1;
      ++cur_size;
      self(self, e + 1);
      --cur_size;
      cur[e] = 0;
      for (Vertex v : members) --load[static_cast<std::size_t>(v)];
    }
    self(self, e + 1);
  };
  dfs(dfs, 0);
  BMatching out{{}, b};
  for (std::size_t e = 0; e < m; ++e)
    if (best[e]) out.selected.push_back(h.edge(e).label);
  std::sort(out.selected.begin(), out.selected.end());
  return out;
}

}  // namespace distdom
