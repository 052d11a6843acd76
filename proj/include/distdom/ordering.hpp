#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "distdom/graph.hpp"

namespace distdom {

/// A linear order of the vertices; rank 0 is the smallest vertex.
class Ordering {
 public:
  Ordering() = default;

  /// `sequence[i]` is the vertex of rank i. Throws InputError unless the
  /// sequence is a permutation of 0..n-1.
  static Ordering from_sequence(std::vector<Vertex> sequence);
  static Ordering identity(int n);

  int size() const noexcept { return static_cast<int>(sequence_.size()); }
  int rank(Vertex v) const { return rank_[static_cast<std::size_t>(v)]; }
  Vertex at(int rank) const { return sequence_[static_cast<std::size_t>(rank)]; }
  const std::vector<Vertex>& sequence() const noexcept { return sequence_; }

  friend bool operator==(const Ordering& a, const Ordering& b) { return a.sequence_ == b.sequence_; }

 private:
  std::vector<Vertex> sequence_;
  std::vector<int> rank_;
};

/// Weak accessibility data of a fixed ordering for all radii 0..max_k.
///
/// `reach(v)` lists every u in Q_{max_k}(v) together with the least k such
/// that u is weakly k-accessible from v; Q_k(v) is the prefix of that list
/// filtered by k.
struct WeakReachProfile {
  struct Entry {
    Vertex vertex;
    int radius;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  int max_k = 0;
  std::vector<std::vector<Entry>> reach;  // per v, sorted by vertex id
  std::vector<std::vector<int>> counts;   // counts[k][v] = q_k(v)
  std::vector<int> wcol;                  // wcol[k] = max_v q_k(v)

  VertexSet weakly_reachable(Vertex v, int k) const;
  int q(Vertex v, int k) const { return counts[static_cast<std::size_t>(k)][static_cast<std::size_t>(v)]; }
};

/// Computes Q_k(v) for every vertex and every k <= max_k.
///
/// For each candidate minimum u, a BFS from u restricted to vertices ranked
/// no lower than u finds exactly the vertices w with u in Q_k(w), at the
/// restricted distance k.
WeakReachProfile weak_reach(const Graph& g, const Ordering& order, int max_k);

/// Weak k-coloring number of the ordering: max_v |Q_k(v)|.
int wcol_of_ordering(const Graph& g, const Ordering& order, int k);

enum class OrderingStrategy { Degeneracy, DescendingDegree, InputOrder };

OrderingStrategy parse_ordering_strategy(const std::string& name);
std::string to_string(OrderingStrategy strategy);

/// Degeneracy: repeatedly remove a minimum-degree vertex (smallest id on
/// ties) and give it the largest free rank. DescendingDegree: high degree
/// first, ties by id. InputOrder: the identity.
Ordering heuristic_ordering(const Graph& g, OrderingStrategy strategy);

/// Smallest-last elimination sequence (first removed first) and the
/// degeneracy, i.e. the largest minimum degree seen while peeling.
std::pair<std::vector<Vertex>, int> smallest_last_peeling(const Graph& g);
int degeneracy(const Graph& g);

nlohmann::json ordering_to_json(const Ordering& order);
Ordering ordering_from_json(const nlohmann::json& j);

}  // namespace distdom
