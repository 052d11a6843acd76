#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "distdom/graph.hpp"
#include "distdom/ordering.hpp"

namespace distdom {

struct Arc {
  Vertex tail;
  Vertex head;
  int rho;
  friend bool operator==(const Arc&, const Arc&) = default;
};

struct InArc {
  Vertex tail;
  int rho;
};

struct OutArc {
  Vertex head;
  int rho;
};

/// Directed arc set over the vertices of a graph with lengths in 0..r.
///
/// Arcs are grouped by head (in-arc lists sorted by tail); out-arc lists are
/// kept alongside because the domination sweep and the sparsification step
/// both walk outneighborhoods. Construction only checks ids and lengths;
/// the (LOOP)/(DIST) conditions are checked by verify_augmentation so that
/// corrupted inputs can be reported rather than rejected.
class Augmentation {
 public:
  Augmentation() = default;
  Augmentation(int n, int r, std::span<const Arc> arcs);

  int n() const noexcept { return static_cast<int>(in_.size()); }
  int radius() const noexcept { return radius_; }
  std::size_t arc_count() const noexcept { return arc_count_; }

  std::span<const InArc> in_arcs(Vertex head) const { return in_[static_cast<std::size_t>(head)]; }
  std::span<const OutArc> out_arcs(Vertex tail) const { return out_[static_cast<std::size_t>(tail)]; }

  /// Length of the arc tail->head (the shortest one if duplicated).
  std::optional<int> rho(Vertex tail, Vertex head) const;

  std::vector<Arc> arcs() const;

 private:
  int radius_ = 0;
  std::size_t arc_count_ = 0;
  std::vector<std::vector<InArc>> in_;
  std::vector<std::vector<OutArc>> out_;
};

/// u->v iff u in Q_r(v), with rho(uv) the least r' such that u in Q_{r'}(v).
Augmentation augment_from_ordering(const Graph& g, const Ordering& order, int r);
Augmentation augment_from_reach(const WeakReachProfile& profile, int r);

/// 1-augmentation from an orientation given as (tail, head) pairs, one per
/// edge of g: every edge gets length 1 and every vertex a loop of length 0.
Augmentation orientation_augmentation(const Graph& g, std::span<const Edge> orientation);

struct AugmentationViolation {
  enum class Kind {
    MissingLoop,       // no loop of length 0 at u
    LoopLength,        // loop with nonzero length
    ZeroLengthArc,     // non-loop arc with length 0
    DuplicateArc,      // two arcs u->v
    DistNoWitness,     // dist(u,v) <= r' but no common inneighbor certifies it
    DistFalseWitness,  // a common inneighbor certifies r' but dist(u,v) > r'
  };
  Kind kind;
  Vertex u;
  Vertex v;
  int radius;

  std::string describe() const;
};

struct AugmentationReport {
  bool ok = true;
  std::size_t violation_count = 0;
  std::vector<AugmentationViolation> violations;  // first `max_reported` only
};

/// Exhaustive (LOOP)/(DIST) check over every vertex pair and every r' <= r.
AugmentationReport verify_augmentation(const Graph& g, const Augmentation& aug,
                                       std::size_t max_reported = 64);

/// deg[r'][v]: inneighbors u of v (loop included) with rho(uv) <= r'.
struct IndegreeProfile {
  int radius = 0;
  std::vector<std::vector<int>> deg;
  std::vector<int> delta;  // delta[r'] = max_v deg[r'][v]

  int delta_at(int r) const { return delta[static_cast<std::size_t>(r)]; }
};

IndegreeProfile indegree_profile(const Augmentation& aug);

nlohmann::json augmentation_to_json(const Augmentation& aug);
Augmentation augmentation_from_json(const nlohmann::json& j, int n);

}  // namespace distdom
