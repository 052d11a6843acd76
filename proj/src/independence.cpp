#include "distdom/independence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "distdom/error.hpp"
#include "distdom/ordering.hpp"

namespace distdom {

Hypergraph inneighbor_hypergraph(const Augmentation& aug) {
  std::vector<HyperEdge> edges;
  edges.reserve(static_cast<std::size_t>(aug.n()));
  for (Vertex u = 0; u < aug.n(); ++u) {
    HyperEdge e{u, {}};
    for (const auto& in : aug.in_arcs(u)) e.members.push_back(in.tail);
    if (e.members.empty()) e.members.push_back(u);  // tolerate a missing loop; verify_augmentation reports it
    edges.push_back(std::move(e));
  }
  return Hypergraph(aug.n(), std::move(edges));
}

bool is_b_matching(const Hypergraph& h, const BMatching& m) {
  std::vector<int> load(static_cast<std::size_t>(h.nv()), 0);
  for (std::size_t i = 0; i < m.selected.size(); ++i) {
    if (i > 0 && m.selected[i] == m.selected[i - 1]) return false;
    int idx = h.index_of_label(m.selected[i]);
    if (idx < 0) return false;
    for (Vertex v : h.edge(static_cast<std::size_t>(idx)).members)
      if (++load[static_cast<std::size_t>(v)] > m.b) return false;
  }
  return true;
}

MatchingStrategy parse_matching_strategy(const std::string& name) {
  if (name == "threshold") return MatchingStrategy::Threshold;
  if (name == "threshold+greedy" || name == "greedy") return MatchingStrategy::ThresholdGreedy;
  if (name == "exact") return MatchingStrategy::Exact;
  throw InputError("unknown matching strategy '" + name + "'");
}

std::string to_string(MatchingStrategy s) {
  switch (s) {
    case MatchingStrategy::Threshold: return "threshold";
    case MatchingStrategy::ThresholdGreedy: return "threshold+greedy";
    case MatchingStrategy::Exact: return "exact";
  }
  return "?";
}

namespace {

struct Selector {
  const Hypergraph& h;
  int b;
  std::vector<int> load;
  std::vector<char> chosen;

  Selector(const Hypergraph& hg, int bound)
      : h(hg), b(bound), load(static_cast<std::size_t>(hg.nv()), 0), chosen(hg.edge_count(), 0) {}

  bool fits(std::size_t e) const {
    for (Vertex v : h.edge(e).members)
      if (load[static_cast<std::size_t>(v)] >= b) return false;
    return true;
  }
  void take(std::size_t e) {
    chosen[e] = 1;
    for (Vertex v : h.edge(e).members) ++load[static_cast<std::size_t>(v)];
  }
  void greedy(const std::vector<std::size_t>& order) {
    for (std::size_t e : order)
      if (!chosen[e] && fits(e)) take(e);
  }
  BMatching result() const {
    BMatching m{{}, b};
    for (std::size_t e = 0; e < chosen.size(); ++e)
      if (chosen[e]) m.selected.push_back(h.edge(e).label);
    std::sort(m.selected.begin(), m.selected.end());
    return m;
  }
};

std::vector<std::size_t> by_size(const Hypergraph& h) {
  std::vector<std::size_t> order(h.edge_count());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t c) { return h.edge(a).members.size() < h.edge(c).members.size(); });
  return order;
}

class MatchingSearch {
 public:
  MatchingSearch(const Hypergraph& h, int b, std::vector<char> incumbent, std::size_t upper, std::uint64_t max_nodes)
      : h_(h), b_(b), order_(by_size(h)), best_(std::move(incumbent)), upper_(upper), max_nodes_(max_nodes) {
    best_count_ = static_cast<std::size_t>(std::count(best_.begin(), best_.end(), 1));
    cap_.assign(static_cast<std::size_t>(h.nv()), b);
    rem_.assign(static_cast<std::size_t>(h.nv()), 0);
    for (const auto& e : h.edges())
      for (Vertex v : e.members) ++rem_[static_cast<std::size_t>(v)];
    cur_.assign(h.edge_count(), 0);
  }

  std::vector<char> run() {
    if (best_count_ < upper_) dfs(0, 0);
    return best_;
  }

 private:
  void dfs(std::size_t i, std::size_t count) {
    if (++nodes_ > max_nodes_) throw BudgetExceeded("b-matching search exceeded its node budget");
    if (count > best_count_) {
      best_count_ = count;
      best_ = cur_;
    }
    if (best_count_ >= upper_ || i == order_.size()) return;
    int excess = 0;
    for (std::size_t v = 0; v < rem_.size(); ++v) excess = std::max(excess, rem_[v] - cap_[v]);
    if (count + (order_.size() - i) - static_cast<std::size_t>(excess) <= best_count_) return;

    const std::size_t e = order_[i];
    const auto& members = h_.edge(e).members;
    bool fits = std::all_of(members.begin(), members.end(), [&](Vertex v) { return cap_[static_cast<std::size_t>(v)] > 0; });
    for (Vertex v : members) --rem_[static_cast<std::size_t>(v)];
    if (fits) {
      for (Vertex v : members) --cap_[static_cast<std::size_t>(v)];
      cur_[e] = 1;
      dfs(i + 1, count + 1);
      cur_[e] = 0;
      for (Vertex v : members) ++cap_[static_cast<std::size_t>(v)];
    }
    if (best_count_ < upper_) dfs(i + 1, count);
    for (Vertex v : members) ++rem_[static_cast<std::size_t>(v)];
  }

  const Hypergraph& h_;
  int b_;
  std::vector<std::size_t> order_;
  std::vector<char> best_;
  std::size_t best_count_ = 0;
  std::size_t upper_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  std::vector<int> cap_, rem_;
  std::vector<char> cur_;
};

BMatching exact_search(const Hypergraph& h, int b, Selector start, const MatchingLimits& limits) {
  if (h.edge_count() > limits.max_edges)
    throw BudgetExceeded("exact b-matching refuses " + std::to_string(h.edge_count()) + " edges (limit " +
                         std::to_string(limits.max_edges) + ")");
  start.greedy(by_size(h));
  // The float LP optimum bounds the integral one; the slack absorbs rounding.
  auto lp = solve(bmatching_lp(h, b), NumericMode::Float);
  std::size_t upper = h.edge_count();
  if (lp.optimal()) upper = std::min(upper, static_cast<std::size_t>(std::floor(lp.objective + 1e-6)));
  MatchingSearch search(h, b, start.chosen, upper, limits.max_nodes);
  Selector done(h, b);
  done.chosen = search.run();
  return done.result();
}

}  // namespace

BMatching extract_kmatching(const Hypergraph& h, int k, const LpSolution& m, MatchingStrategy strategy,
                            const MatchingLimits& limits) {
  if (k < 1) throw InputError("k-matching needs k >= 1");
  if (!m.optimal() || m.size() != h.edge_count())
    throw InputError("fractional matching must carry one value per hyperedge");

  Selector sel(h, k);
  const Rational threshold = make_rational(1, k);
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    bool heavy = m.exact() ? m.exact_values[e] >= threshold : m.values[e] >= 1.0 / k - 1e-9;
    if (heavy && sel.fits(e)) sel.take(e);
  }
  // A feasible fractional matching keeps M_1 within the bound; the fits()
  // guard above only matters for float noise.
  BMatching out;
  switch (strategy) {
    case MatchingStrategy::Threshold: out = sel.result(); break;
    case MatchingStrategy::ThresholdGreedy:
      sel.greedy(by_size(h));
      out = sel.result();
      break;
    case MatchingStrategy::Exact: out = exact_search(h, k, sel, limits); break;
  }
  if (!is_b_matching(h, out)) throw Error("extracted edge set violates the k-matching bound");
  return out;
}

BMatching maximum_bmatching(const Hypergraph& h, int b, const MatchingLimits& limits) {
  if (b < 1) throw InputError("b-matching needs b >= 1");
  return exact_search(h, b, Selector(h, b), limits);
}

OutBoundedResult out_bounded_set(const Graph& g, const Augmentation& aug, MatchingStrategy strategy, NumericMode mode,
                                 const MatchingLimits& limits, const LpSolution* packing) {
  if (aug.n() != g.n()) throw InputError("augmentation and graph sizes differ");
  const int r = aug.radius();
  OutBoundedResult out;
  out.k = indegree_profile(aug).delta_at(r);
  out.packing = packing ? *packing : solve_independence(g, r, mode);
  if (!out.packing.optimal()) throw Error("packing LP returned " + to_string(out.packing.status));

  auto h = inneighbor_hypergraph(aug);
  // Edge index u carries label u, so the vertex solution is the edge solution.
  out.matching = extract_kmatching(h, out.k, out.packing, strategy, limits);
  out.y = VertexSet(out.matching.selected);

  auto in_y = out.y.mask(g.n());
  out.out_counts.assign(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v = 0; v < g.n(); ++v)
    for (const auto& a : aug.out_arcs(v))
      if (in_y[static_cast<std::size_t>(a.head)]) ++out.out_counts[static_cast<std::size_t>(v)];
  return out;
}

IndependenceCertificate certify_2rb_independent(const Graph& g, const VertexSet& y, int r, std::int64_t b) {
  IndependenceCertificate cert;
  cert.counts.assign(static_cast<std::size_t>(g.n()), 0);
  for (Vertex u : y) {
    g.check_vertex(u);
    auto dist = distances_from(g, u, r);
    for (Vertex v = 0; v < g.n(); ++v)
      if (dist[static_cast<std::size_t>(v)] <= r) ++cert.counts[static_cast<std::size_t>(v)];
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    int c = cert.counts[static_cast<std::size_t>(v)];
    if (cert.worst_vertex < 0 || c > cert.count) {
      cert.count = c;
      cert.worst_vertex = v;
    }
  }
  cert.ok = cert.count <= b;
  return cert;
}

SparsifyResult sparsify_to_independent(const Graph& g, const Augmentation& aug2r, const VertexSet& y, std::int64_t b) {
  if (aug2r.n() != g.n()) throw InputError("augmentation and graph sizes differ");
  if (aug2r.radius() < 2 || aug2r.radius() % 2 != 0) throw InputError("sparsification needs an augmentation of even radius 2r");
  const int r = aug2r.radius() / 2;
  if (!certify_2rb_independent(g, y, r, b).ok)
    throw InputError("input set is not (2r,b)-independent for b = " + std::to_string(b));

  SparsifyResult out;
  out.d = b * indegree_profile(aug2r).delta_at(2 * r);

  const auto& members = y.members();
  const int ny = static_cast<int>(members.size());
  std::vector<int> index(static_cast<std::size_t>(g.n()), -1);
  for (int i = 0; i < ny; ++i) index[static_cast<std::size_t>(members[static_cast<std::size_t>(i)])] = i;
  std::vector<Edge> conflicts;
  for (int i = 0; i < ny; ++i) {
    auto dist = distances_from(g, members[static_cast<std::size_t>(i)], 2 * r);
    for (int j = i + 1; j < ny; ++j)
      if (dist[static_cast<std::size_t>(members[static_cast<std::size_t>(j)])] <= 2 * r) conflicts.emplace_back(i, j);
  }
  out.conflict_edges = conflicts.size();
  auto conflict = Graph::from_edges(ny, conflicts);

  // Color in reverse elimination order: each vertex sees at most
  // `degeneracy` colored neighbors.
  auto [peel, degen] = smallest_last_peeling(conflict);
  (void)degen;
  std::vector<int> color(static_cast<std::size_t>(ny), -1);
  for (auto it = peel.rbegin(); it != peel.rend(); ++it) {
    std::vector<char> used;
    for (Vertex w : conflict.neighbors(*it)) {
      int c = color[static_cast<std::size_t>(w)];
      if (c < 0) continue;
      if (static_cast<std::size_t>(c) >= used.size()) used.resize(static_cast<std::size_t>(c) + 1, 0);
      used[static_cast<std::size_t>(c)] = 1;
    }
    int c = 0;
    while (static_cast<std::size_t>(c) < used.size() && used[static_cast<std::size_t>(c)]) ++c;
    color[static_cast<std::size_t>(*it)] = c;
    out.colors = std::max(out.colors, c + 1);
  }
  std::vector<int> class_size(static_cast<std::size_t>(out.colors), 0);
  for (int c : color) ++class_size[static_cast<std::size_t>(c)];
  // Among the largest classes, the one holding the smallest id.
  const int top = out.colors > 0 ? *std::max_element(class_size.begin(), class_size.end()) : 0;
  int best = -1;
  for (int i = 0; i < ny && best < 0; ++i)
    if (class_size[static_cast<std::size_t>(color[static_cast<std::size_t>(i)])] == top) best = color[static_cast<std::size_t>(i)];
  std::vector<Vertex> chosen;
  for (int i = 0; i < ny; ++i)
    if (color[static_cast<std::size_t>(i)] == best) chosen.push_back(members[static_cast<std::size_t>(i)]);
  out.y1 = VertexSet(std::move(chosen));
  return out;
}

std::vector<Edge> conflict_orientation(const Graph& g, const Augmentation& aug2r, const VertexSet& y) {
  const int r = aug2r.radius() / 2;
  auto in_y = y.mask(g.n());
  std::vector<Edge> arcs;
  for (Vertex y1 : y) {
    // Only conflict pairs (distance <= 2r) are edges to orient.
    auto near = distances_from(g, y1, 2 * r);
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    for (const auto& in : aug2r.in_arcs(y1)) {
      auto dist = distances_from(g, in.tail, r);
      for (Vertex y2 = 0; y2 < g.n(); ++y2) {
        const auto i = static_cast<std::size_t>(y2);
        if (y2 != y1 && in_y[i] && !seen[i] && dist[i] <= r && near[i] <= 2 * r) {
          seen[i] = 1;
          arcs.emplace_back(y2, y1);
        }
      }
    }
  }
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

nlohmann::json bmatching_to_json(const BMatching& m) { return {{"selected", m.selected}, {"b", m.b}}; }

}  // namespace distdom
