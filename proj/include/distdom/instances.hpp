#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "distdom/augmentation.hpp"
#include "distdom/graph.hpp"
#include "distdom/hypergraph.hpp"
#include "distdom/ordering.hpp"

namespace distdom {

enum class Role { HyperVertex, HyperEdge, Subdivision, Apex, ApexPath };
std::string to_string(Role role);
Role parse_role(const std::string& name);

/// H^(r) with per-vertex role tags.
///
/// Id layout: hypergraph vertices 0..nv-1, then one vertex per hyperedge (in
/// edge order), then r-1 subdivision vertices per incidence (incidences in
/// edge order, members ascending, each path listed from the hypergraph
/// vertex towards the edge vertex), then the apex, then r-1 internal
/// vertices per apex path (apex side first).
struct LabeledConstruction {
  Graph graph;
  std::vector<Role> roles;
  std::vector<int> hyperedge_label;  // per vertex: edge label for HyperEdge vertices, -1 otherwise
  int r = 0;
  Vertex apex = -1;

  std::vector<Vertex> with_role(Role role) const;
};

/// Incidence graph of h with every incidence subdivided by r-1 vertices, plus
/// an apex joined by internally disjoint paths of length r to each
/// non-hypergraph vertex of the subdivided graph.
LabeledConstruction build_h_r(const Hypergraph& h, int r);

/// Apex, then hypergraph vertices, then hyperedge vertices, then everything
/// else; ascending id inside each block.
Ordering canonical_ordering(const LabeledConstruction& c);

/// K_n as a hypergraph: all pairs {i, j}, labelled in lexicographic order.
Hypergraph clique_hypergraph(int n);

/// Vertices are the (n+1)/2-subsets of {0..n-1} in lexicographic order; edge
/// i holds the subsets containing i. Needs odd n >= 3.
Hypergraph covering_hard_hypergraph(int n);

Graph grid_graph(int rows, int cols);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);  // center 0
Graph complete_graph(int n);

/// Vertices inserted one at a time, each joined to min(i, d) distinct random
/// earlier vertices; ids are shuffled afterwards. The orientation lists every
/// edge as (earlier, later), so indegrees are at most d.
struct DegenerateInstance {
  Graph graph;
  std::vector<Edge> orientation;
  int d = 0;
};
DegenerateInstance random_degenerate(int n, int d, std::uint64_t seed);

enum class Family { Grid, RandomDegenerate, SubdividedClique, CoveringHard };
Family parse_family(const std::string& name);
std::string to_string(Family family);

struct FamilyParams {
  int rows = 3, cols = 3;  // grid
  int n = 10;              // random-degenerate size, clique / covering-hard order
  int d = 2;               // random-degenerate
  int r = 1;               // H^(r) constructions
};

/// A graph to analyze, with whatever certified structure came with it.
struct CorpusInstance {
  std::string id;
  Graph graph;
  int r = 1;
  std::optional<Ordering> ordering;
  std::optional<std::vector<Edge>> orientation;
  std::optional<Augmentation> augmentation;
  std::optional<std::vector<Role>> roles;
  std::optional<int> degeneracy_bound;  // d of a certified orientation
};

/// Deterministic for a fixed seed; the H^(r) families carry their canonical
/// ordering and roles.
CorpusInstance random_corpus(std::uint64_t seed, Family family, const FamilyParams& params);

/// The standard verification corpus (grids, random-degenerate graphs with
/// d in {1,2,3}, H^(r) constructions, small named graphs), sorted by id.
std::vector<CorpusInstance> default_corpus(std::uint64_t seed);

/// Instance file: the graph JSON plus optional "id", "r", "ordering",
/// "orientation", "augmentation", "roles", "degeneracy".
nlohmann::json instance_to_json(const CorpusInstance& inst);
CorpusInstance instance_from_json(const nlohmann::json& j, const std::string& fallback_id);

/// Loads a .json instance or a DIMACS graph (r defaults to 1).
CorpusInstance load_instance(const std::string& path);

}  // namespace distdom
