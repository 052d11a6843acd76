#include "distdom/hypergraph.hpp"

#include <algorithm>

#include "distdom/error.hpp"

namespace distdom {

Hypergraph::Hypergraph(int nv, std::vector<HyperEdge> edges) : nv_(nv), edges_(std::move(edges)) {
  if (nv < 0) throw InputError("negative hypergraph vertex count");
  std::vector<int> labels;
  for (auto& e : edges_) {
    if (e.members.empty()) throw InputError("hyperedge " + std::to_string(e.label) + " is empty");
    std::sort(e.members.begin(), e.members.end());
    e.members.erase(std::unique(e.members.begin(), e.members.end()), e.members.end());
    for (Vertex v : e.members)
      if (v < 0 || v >= nv)
        throw InputError("hyperedge " + std::to_string(e.label) + " has member " + std::to_string(v) +
                         " outside 0.." + std::to_string(nv - 1));
    labels.push_back(e.label);
  }
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw InputError("hyperedge labels must be distinct");
}

int Hypergraph::index_of_label(int label) const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].label == label) return static_cast<int>(i);
  return -1;
}

std::size_t Hypergraph::max_edge_size() const {
  std::size_t k = 0;
  for (const auto& e : edges_) k = std::max(k, e.members.size());
  return k;
}

std::vector<int> Hypergraph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(nv_), 0);
  for (const auto& e : edges_)
    for (Vertex v : e.members) ++deg[static_cast<std::size_t>(v)];
  return deg;
}

int Hypergraph::min_degree() const {
  auto deg = degrees();
  return deg.empty() ? 0 : *std::min_element(deg.begin(), deg.end());
}

nlohmann::json hypergraph_to_json(const Hypergraph& h) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : h.edges()) edges.push_back({{"label", e.label}, {"members", e.members}});
  return {{"nv", h.nv()}, {"edges", std::move(edges)}};
}

Hypergraph hypergraph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("nv") || !j.contains("edges"))
    throw InputError("hypergraph JSON needs keys \"nv\" and \"edges\"");
  std::vector<HyperEdge> edges;
  for (const auto& e : j["edges"])
    edges.push_back({e.at("label").get<int>(), e.at("members").get<std::vector<Vertex>>()});
  return Hypergraph(j["nv"].get<int>(), std::move(edges));
}

}  // namespace distdom
