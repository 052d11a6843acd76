#pragma once

#include <vector>

#include <json.hpp>

#include "distdom/graph.hpp"

namespace distdom {

struct HyperEdge {
  int label;
  std::vector<Vertex> members;  // sorted, nonempty
};

/// Vertex count plus labelled edges. Two edges may have identical member
/// sets; labels keep them apart.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(int nv, std::vector<HyperEdge> edges);

  int nv() const noexcept { return nv_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<HyperEdge>& edges() const noexcept { return edges_; }
  const HyperEdge& edge(std::size_t i) const { return edges_[i]; }

  /// Index of the edge carrying `label`, or -1.
  int index_of_label(int label) const;

  std::size_t max_edge_size() const;
  std::vector<int> degrees() const;
  int min_degree() const;

 private:
  int nv_ = 0;
  std::vector<HyperEdge> edges_;
};

nlohmann::json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const nlohmann::json& j);

}  // namespace distdom
