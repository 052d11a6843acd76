#include "distdom/augmentation.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "distdom/error.hpp"

namespace distdom {

Augmentation::Augmentation(int n, int r, std::span<const Arc> arcs) : radius_(r) {
  if (n < 0) throw InputError("negative vertex count");
  if (r < 0) throw InputError("augmentation radius must be non-negative");
  in_.assign(static_cast<std::size_t>(n), {});
  out_.assign(static_cast<std::size_t>(n), {});
  for (const Arc& a : arcs) {
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
      throw InputError("arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) + ") out of range");
    if (a.rho < 0 || a.rho > r)
      throw InputError("arc length " + std::to_string(a.rho) + " outside 0.." + std::to_string(r));
    in_[static_cast<std::size_t>(a.head)].push_back({a.tail, a.rho});
    out_[static_cast<std::size_t>(a.tail)].push_back({a.head, a.rho});
  }
  for (auto& list : in_)
    std::sort(list.begin(), list.end(), [](const InArc& x, const InArc& y) {
      return x.tail != y.tail ? x.tail < y.tail : x.rho < y.rho;
    });
  for (auto& list : out_)
    std::sort(list.begin(), list.end(), [](const OutArc& x, const OutArc& y) {
      return x.head != y.head ? x.head < y.head : x.rho < y.rho;
    });
  arc_count_ = arcs.size();
}

std::optional<int> Augmentation::rho(Vertex tail, Vertex head) const {
  auto list = in_arcs(head);
  auto it = std::lower_bound(list.begin(), list.end(), tail,
                             [](const InArc& a, Vertex t) { return a.tail < t; });
  if (it == list.end() || it->tail != tail) return std::nullopt;
  return it->rho;
}

std::vector<Arc> Augmentation::arcs() const {
  std::vector<Arc> out;
  out.reserve(arc_count_);
  for (Vertex head = 0; head < n(); ++head)
    for (const auto& a : in_arcs(head)) out.push_back({a.tail, head, a.rho});
  return out;
}

Augmentation augment_from_reach(const WeakReachProfile& profile, int r) {
  if (r < 0 || r > profile.max_k) throw InputError("augmentation radius exceeds the weak-reach profile");
  std::vector<Arc> arcs;
  const auto n = static_cast<int>(profile.reach.size());
  for (Vertex v = 0; v < n; ++v)
    for (const auto& e : profile.reach[static_cast<std::size_t>(v)])
      if (e.radius <= r) arcs.push_back({e.vertex, v, e.radius});
  return Augmentation(n, r, arcs);
}

Augmentation augment_from_ordering(const Graph& g, const Ordering& order, int r) {
  if (r < 1) throw InputError("augmentation radius must be at least 1");
  return augment_from_reach(weak_reach(g, order, r), r);
}

Augmentation orientation_augmentation(const Graph& g, std::span<const Edge> orientation) {
  std::vector<char> seen;
  std::map<Edge, int> index;
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) index.emplace(edges[i], static_cast<int>(i));
  seen.assign(edges.size(), 0);
  std::vector<Arc> arcs;
  for (Vertex v = 0; v < g.n(); ++v) arcs.push_back({v, v, 0});
  for (const auto& [tail, head] : orientation) {
    Edge key{std::min(tail, head), std::max(tail, head)};
    auto it = index.find(key);
    if (it == index.end())
      throw InputError("oriented pair (" + std::to_string(tail) + "," + std::to_string(head) + ") is not an edge");
    if (seen[static_cast<std::size_t>(it->second)]++)
      throw InputError("edge {" + std::to_string(key.first) + "," + std::to_string(key.second) +
                       "} oriented twice");
    arcs.push_back({tail, head, 1});
  }
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (!seen[i])
      throw InputError("edge {" + std::to_string(edges[i].first) + "," + std::to_string(edges[i].second) +
                       "} has no orientation");
  return Augmentation(g.n(), 1, arcs);
}

std::string AugmentationViolation::describe() const {
  const std::string where = "(" + std::to_string(u) + "," + std::to_string(v) + "," + std::to_string(radius) + ")";
  switch (kind) {
    case Kind::MissingLoop: return "(LOOP) violation at " + where + ": no loop of length 0";
    case Kind::LoopLength: return "(LOOP) violation at " + where + ": loop has nonzero length";
    case Kind::ZeroLengthArc: return "length violation at " + where + ": non-loop arc of length 0";
    case Kind::DuplicateArc: return "duplicate arc at " + where;
    case Kind::DistNoWitness:
      return "(DIST) violation at " + where + ": distance <= r' but no common inneighbor certifies it";
    case Kind::DistFalseWitness:
      return "(DIST) violation at " + where + ": common inneighbor certifies r' but distance > r'";
  }
  return "unknown violation";
}

AugmentationReport verify_augmentation(const Graph& g, const Augmentation& aug, std::size_t max_reported) {
  if (aug.n() != g.n()) throw InputError("augmentation and graph have different vertex counts");
  AugmentationReport report;
  auto record = [&](AugmentationViolation::Kind kind, Vertex u, Vertex v, int radius) {
    report.ok = false;
    ++report.violation_count;
    if (report.violations.size() < max_reported) report.violations.push_back({kind, u, v, radius});
  };

  const int n = g.n();
  const int r = aug.radius();
  for (Vertex v = 0; v < n; ++v) {
    auto arcs = aug.in_arcs(v);
    bool loop = false;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      const auto& a = arcs[i];
      if (i > 0 && arcs[i - 1].tail == a.tail) record(AugmentationViolation::Kind::DuplicateArc, a.tail, v, a.rho);
      if (a.tail == v) {
        if (a.rho == 0) loop = true;
        else record(AugmentationViolation::Kind::LoopLength, v, v, a.rho);
      } else if (a.rho == 0) {
        record(AugmentationViolation::Kind::ZeroLengthArc, a.tail, v, 0);
      }
    }
    if (!loop) record(AugmentationViolation::Kind::MissingLoop, v, v, 0);
  }

  // witness[u*n+v]: least rho(xu)+rho(xv) over common inneighbors x, capped at r+1.
  const int cap = r + 1;
  std::vector<std::int16_t> witness(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                                    static_cast<std::int16_t>(cap));
  for (Vertex x = 0; x < n; ++x) {
    auto outs = aug.out_arcs(x);
    for (const auto& a : outs)
      for (const auto& b : outs) {
        int s = std::min(a.rho + b.rho, cap);
        auto& w = witness[static_cast<std::size_t>(a.head) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b.head)];
        if (s < w) w = static_cast<std::int16_t>(s);
      }
  }
  for (Vertex u = 0; u < n; ++u) {
    auto dist = distances_from(g, u, r);
    for (Vertex v = u; v < n; ++v) {
      int d = std::min(dist[static_cast<std::size_t>(v)], cap);
      int w = witness[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)];
      // For each r' <= r the equivalence fails exactly when r' lies between the two.
      for (int rp = d; rp < w; ++rp) record(AugmentationViolation::Kind::DistNoWitness, u, v, rp);
      for (int rp = w; rp < d; ++rp) record(AugmentationViolation::Kind::DistFalseWitness, u, v, rp);
    }
  }
  return report;
}

IndegreeProfile indegree_profile(const Augmentation& aug) {
  IndegreeProfile p;
  p.radius = aug.radius();
  const auto levels = static_cast<std::size_t>(aug.radius()) + 1;
  p.deg.assign(levels, std::vector<int>(static_cast<std::size_t>(aug.n()), 0));
  p.delta.assign(levels, 0);
  for (Vertex v = 0; v < aug.n(); ++v) {
    for (const auto& a : aug.in_arcs(v)) ++p.deg[static_cast<std::size_t>(a.rho)][static_cast<std::size_t>(v)];
    for (std::size_t k = 1; k < levels; ++k) p.deg[k][static_cast<std::size_t>(v)] += p.deg[k - 1][static_cast<std::size_t>(v)];
  }
  for (std::size_t k = 0; k < levels; ++k)
    for (int d : p.deg[k]) p.delta[k] = std::max(p.delta[k], d);
  return p;
}

nlohmann::json augmentation_to_json(const Augmentation& aug) {
  nlohmann::json arcs = nlohmann::json::array();
  for (const auto& a : aug.arcs()) arcs.push_back({a.tail, a.head, a.rho});
  return {{"r", aug.radius()}, {"arcs", std::move(arcs)}};
}

Augmentation augmentation_from_json(const nlohmann::json& j, int n) {
  if (!j.is_object() || !j.contains("r") || !j.contains("arcs"))
    throw InputError("augmentation JSON needs keys \"r\" and \"arcs\"");
  std::vector<Arc> arcs;
  for (const auto& a : j["arcs"]) {
    if (!a.is_array() || a.size() != 3) throw InputError("arc entries must be [tail, head, rho]");
    arcs.push_back({a[0].get<Vertex>(), a[1].get<Vertex>(), a[2].get<int>()});
  }
  return Augmentation(n, j["r"].get<int>(), arcs);
}

}  // namespace distdom
