#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace distdom {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

// Distance value for vertices in different components.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);

  bool contains(Vertex v) const;
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  const std::vector<Vertex>& members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  // Characteristic vector over 0..n-1.
  std::vector<char> mask(int n) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Immutable simple undirected graph on dense ids 0..n-1 with optional labels.
///
/// Neighbor lists are sorted ascending; no self-loops, no parallel edges.
/// Safe to share between threads once constructed.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate edges (in either direction)
  /// collapse; self-loops and out-of-range ids raise InputError.
  static Graph from_edges(int n, std::span<const Edge> edges,
                          std::vector<std::string> labels = {});
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int n() const noexcept { return static_cast<int>(adjacency_.size()); }
  std::size_t m() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(Vertex u, Vertex v) const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  bool valid_vertex(Vertex v) const noexcept { return v >= 0 && v < n(); }
  void check_vertex(Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_ && a.labels_ == b.labels_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

/// BFS distances from `source`, truncated at `max_depth`; vertices farther
/// away (or unreachable) get kUnreachable.
std::vector<int> distances_from(const Graph& g, Vertex source,
                                int max_depth = kUnreachable);

/// Shortest-path length, kUnreachable when disconnected.
int distance(const Graph& g, Vertex u, Vertex v);

/// N_r[v]: every vertex at distance at most r from v, v included.
VertexSet ball(const Graph& g, Vertex v, int r);

/// Whole-graph table of radius-r balls, for callers that query many balls.
class BallTable {
 public:
  BallTable(const Graph& g, int r);

  int radius() const noexcept { return radius_; }
  const VertexSet& ball(Vertex v) const { return balls_[static_cast<std::size_t>(v)]; }
  const std::vector<VertexSet>& balls() const noexcept { return balls_; }

 private:
  int radius_;
  std::vector<VertexSet> balls_;
};

/// True iff some member of `set` lies within distance r of v.
bool within_distance_of_set(const Graph& g, Vertex v, int r,
                            const std::vector<char>& in_set);

bool is_r_dominating(const Graph& g, const VertexSet& set, int r);

/// Pairwise distances strictly greater than 2r.
bool is_2r_independent(const Graph& g, const VertexSet& set, int r);

// --- file formats ----------------------------------------------------------

enum class GraphFormat { DimacsEdge, Json };

/// DIMACS edge format (`c`, `p edge n m`, `e u v`, 1-based) or the JSON form
/// `{"n": int, "edges": [[u, v], ...], "labels": [...]}` with 0-based ids.
Graph parse_graph(std::istream& in, GraphFormat format);
Graph parse_graph_string(const std::string& text, GraphFormat format);

/// Picks the format from the extension: `.json` is JSON, anything else DIMACS.
GraphFormat format_for_path(const std::string& path);
Graph load_graph(const std::string& path);

Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);
std::string to_dimacs(const Graph& g);

}  // namespace distdom
