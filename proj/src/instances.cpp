#include "distdom/instances.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "distdom/error.hpp"
#include "distdom/random.hpp"

namespace distdom {

std::string to_string(Role role) {
  switch (role) {
    case Role::HyperVertex: return "hyper-vertex";
    case Role::HyperEdge: return "hyper-edge";
    case Role::Subdivision: return "subdivision";
    case Role::Apex: return "apex";
    case Role::ApexPath: return "apex-path";
  }
  return "?";
}

Role parse_role(const std::string& name) {
  for (Role r : {Role::HyperVertex, Role::HyperEdge, Role::Subdivision, Role::Apex, Role::ApexPath})
    if (to_string(r) == name) return r;
  throw InputError("unknown role '" + name + "'");
}

std::vector<Vertex> LabeledConstruction::with_role(Role role) const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < roles.size(); ++v)
    if (roles[v] == role) out.push_back(static_cast<Vertex>(v));
  return out;
}

LabeledConstruction build_h_r(const Hypergraph& h, int r) {
  if (r < 1) throw InputError("construction radius must be at least 1");
  if (h.nv() == 0 || h.edge_count() == 0) throw InputError("construction needs a nonempty hypergraph");

  LabeledConstruction c;
  c.r = r;
  std::vector<Edge> edges;
  auto add_vertex = [&](Role role, int label = -1) {
    c.roles.push_back(role);
    c.hyperedge_label.push_back(label);
    return static_cast<Vertex>(c.roles.size() - 1);
  };
  // Path a - (len-1 fresh vertices) - b.
  auto add_path = [&](Vertex a, Vertex b, int len, Role role) {
    Vertex prev = a;
    for (int i = 1; i < len; ++i) {
      Vertex s = add_vertex(role);
      edges.emplace_back(prev, s);
      prev = s;
    }
    edges.emplace_back(prev, b);
  };

  for (int v = 0; v < h.nv(); ++v) add_vertex(Role::HyperVertex);
  std::vector<Vertex> edge_vertex;
  for (const auto& e : h.edges()) edge_vertex.push_back(add_vertex(Role::HyperEdge, e.label));
  for (std::size_t i = 0; i < h.edge_count(); ++i)
    for (Vertex v : h.edge(i).members) add_path(v, edge_vertex[i], r, Role::Subdivision);

  const auto outside = static_cast<Vertex>(c.roles.size());  // V(H_2) \ V(H) = [nv, outside)
  c.apex = add_vertex(Role::Apex);
  for (Vertex w = h.nv(); w < outside; ++w) add_path(c.apex, w, r, Role::ApexPath);

  c.graph = Graph::from_edges(static_cast<int>(c.roles.size()), edges);
  return c;
}

Ordering canonical_ordering(const LabeledConstruction& c) {
  std::vector<Vertex> seq;
  if (c.apex >= 0) seq.push_back(c.apex);
  for (Role role : {Role::HyperVertex, Role::HyperEdge})
    for (Vertex v : c.with_role(role)) seq.push_back(v);
  for (std::size_t v = 0; v < c.roles.size(); ++v) {
    Role role = c.roles[v];
    if (role == Role::Subdivision || role == Role::ApexPath) seq.push_back(static_cast<Vertex>(v));
  }
  return Ordering::from_sequence(std::move(seq));
}

Hypergraph clique_hypergraph(int n) {
  if (n < 2) throw InputError("clique hypergraph needs n >= 2");
  std::vector<HyperEdge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({static_cast<int>(edges.size()), {i, j}});
  return Hypergraph(n, std::move(edges));
}

Hypergraph covering_hard_hypergraph(int n) {
  if (n < 3 || n % 2 == 0) throw InputError("covering-hard hypergraph needs odd n >= 3");
  const int half = (n + 1) / 2;
  std::vector<std::vector<int>> subsets;
  std::vector<int> pick(static_cast<std::size_t>(half));
  // Lexicographic half-subsets of {0..n-1}.
  for (int i = 0; i < half; ++i) pick[static_cast<std::size_t>(i)] = i;
  for (;;) {
    subsets.push_back(pick);
    int i = half - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - half + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < half; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  std::vector<HyperEdge> edges;
  for (int i = 0; i < n; ++i) {
    HyperEdge e{i, {}};
    for (std::size_t s = 0; s < subsets.size(); ++s)
      if (std::binary_search(subsets[s].begin(), subsets[s].end(), i)) e.members.push_back(static_cast<Vertex>(s));
    edges.push_back(std::move(e));
  }
  return Hypergraph(static_cast<int>(subsets.size()), std::move(edges));
}

Graph grid_graph(int rows, int cols) {
  if (rows < 1 || cols < 1) throw InputError("grid dimensions must be positive");
  std::vector<Edge> edges;
  auto id = [cols](int i, int j) { return static_cast<Vertex>(i * cols + j); };
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (j + 1 < cols) edges.emplace_back(id(i, j), id(i, j + 1));
      if (i + 1 < rows) edges.emplace_back(id(i, j), id(i + 1, j));
    }
  return Graph::from_edges(rows * cols, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw InputError("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph path_graph(int n) {
  if (n < 1) throw InputError("path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph star_graph(int leaves) {
  if (leaves < 0) throw InputError("star needs a non-negative leaf count");
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, edges);
}

Graph complete_graph(int n) {
  if (n < 1) throw InputError("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

DegenerateInstance random_degenerate(int n, int d, std::uint64_t seed) {
  if (n < 1 || d < 0) throw InputError("random-degenerate needs n >= 1 and d >= 0");
  Rng rng(seed);
  std::vector<Vertex> id(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)] = i;
  rng.shuffle(id);
  DegenerateInstance out;
  out.d = d;
  for (int i = 1; i < n; ++i) {
    // Partial Fisher-Yates over the predecessors 0..i-1.
    std::vector<int> pool(static_cast<std::size_t>(i));
    for (int j = 0; j < i; ++j) pool[static_cast<std::size_t>(j)] = j;
    const int picks = std::min(i, d);
    for (int t = 0; t < picks; ++t) {
      auto s = static_cast<std::size_t>(t) + rng.below(static_cast<std::uint64_t>(i - t));
      std::swap(pool[static_cast<std::size_t>(t)], pool[s]);
      out.orientation.emplace_back(id[static_cast<std::size_t>(pool[static_cast<std::size_t>(t)])],
                                   id[static_cast<std::size_t>(i)]);
    }
  }
  std::sort(out.orientation.begin(), out.orientation.end());
  out.graph = Graph::from_edges(n, out.orientation);
  return out;
}

Family parse_family(const std::string& name) {
  if (name == "grid") return Family::Grid;
  if (name == "random-degenerate") return Family::RandomDegenerate;
  if (name == "subdivided-clique" || name == "clique-hr") return Family::SubdividedClique;
  if (name == "covering-hard") return Family::CoveringHard;
  throw InputError("unknown family '" + name + "'");
}

std::string to_string(Family family) {
  switch (family) {
    case Family::Grid: return "grid";
    case Family::RandomDegenerate: return "random-degenerate";
    case Family::SubdividedClique: return "subdivided-clique";
    case Family::CoveringHard: return "covering-hard";
  }
  return "?";
}

namespace {

CorpusInstance from_construction(std::string id, const LabeledConstruction& c) {
  CorpusInstance inst;
  inst.id = std::move(id);
  inst.graph = c.graph;
  inst.r = c.r;
  inst.ordering = canonical_ordering(c);
  inst.roles = c.roles;
  return inst;
}

CorpusInstance plain(std::string id, Graph g, int r) {
  CorpusInstance inst;
  inst.id = std::move(id);
  inst.graph = std::move(g);
  inst.r = r;
  return inst;
}

}  // namespace

CorpusInstance random_corpus(std::uint64_t seed, Family family, const FamilyParams& p) {
  switch (family) {
    case Family::Grid:
      return plain("grid-" + std::to_string(p.rows) + "x" + std::to_string(p.cols) + "-r" + std::to_string(p.r),
                   grid_graph(p.rows, p.cols), p.r);
    case Family::RandomDegenerate: {
      auto dg = random_degenerate(p.n, p.d, seed);
      CorpusInstance inst = plain("degenerate-d" + std::to_string(p.d) + "-n" + std::to_string(p.n) + "-r" +
                                      std::to_string(p.r) + "-s" + std::to_string(seed),
                                  std::move(dg.graph), p.r);
      inst.orientation = std::move(dg.orientation);
      inst.degeneracy_bound = p.d;
      return inst;
    }
    case Family::SubdividedClique:
      return from_construction("clique-k" + std::to_string(p.n) + "-r" + std::to_string(p.r),
                               build_h_r(clique_hypergraph(p.n), p.r));
    case Family::CoveringHard:
      return from_construction("covering-n" + std::to_string(p.n) + "-r" + std::to_string(p.r),
                               build_h_r(covering_hard_hypergraph(p.n), p.r));
  }
  throw InputError("unknown family");
}

std::vector<CorpusInstance> default_corpus(std::uint64_t seed) {
  std::vector<CorpusInstance> out;
  auto grid = [&](int rows, int cols, int r) {
    FamilyParams p;
    p.rows = rows;
    p.cols = cols;
    p.r = r;
    out.push_back(random_corpus(seed, Family::Grid, p));
  };
  grid(3, 3, 1);
  grid(3, 3, 2);
  grid(4, 4, 1);
  grid(4, 4, 2);
  grid(5, 5, 1);
  grid(3, 6, 1);
  grid(6, 6, 1);
  grid(2, 8, 2);

  // Distinct seeds per instance, derived from the corpus seed.
  std::uint64_t salt = 0;
  auto degenerate = [&](int n, int d, int r) {
    FamilyParams p;
    p.n = n;
    p.d = d;
    p.r = r;
    out.push_back(random_corpus(seed * 1000 + (++salt), Family::RandomDegenerate, p));
  };
  for (int d = 1; d <= 3; ++d) {
    degenerate(12, d, 1);
    degenerate(14, d, 2);
    degenerate(30, d, 1);
    degenerate(60, d, 1);
    degenerate(40, d, 2);
  }

  auto construction = [&](Family f, int n, int r) {
    FamilyParams p;
    p.n = n;
    p.r = r;
    out.push_back(random_corpus(seed, f, p));
  };
  construction(Family::SubdividedClique, 4, 1);
  construction(Family::SubdividedClique, 5, 1);
  construction(Family::SubdividedClique, 6, 1);
  construction(Family::SubdividedClique, 3, 2);
  construction(Family::SubdividedClique, 4, 2);
  construction(Family::SubdividedClique, 5, 2);
  construction(Family::CoveringHard, 5, 1);
  construction(Family::CoveringHard, 7, 1);

  out.push_back(plain("cycle-5-r1", cycle_graph(5), 1));
  out.push_back(plain("cycle-6-r1", cycle_graph(6), 1));
  out.push_back(plain("path-5-r1", path_graph(5), 1));
  out.push_back(plain("star-4-r1", star_graph(4), 1));
  out.push_back(plain("edgeless-6-r1", Graph::from_edges(6, {}), 1));
  out.push_back(plain("complete-4-r1", complete_graph(4), 1));

  std::sort(out.begin(), out.end(), [](const CorpusInstance& a, const CorpusInstance& b) { return a.id < b.id; });
  return out;
}

nlohmann::json instance_to_json(const CorpusInstance& inst) {
  nlohmann::json j = graph_to_json(inst.graph);
  j["id"] = inst.id;
  j["r"] = inst.r;
  if (inst.ordering) j["ordering"] = ordering_to_json(*inst.ordering);
  if (inst.orientation) {
    nlohmann::json o = nlohmann::json::array();
    for (auto [u, v] : *inst.orientation) o.push_back({u, v});
    j["orientation"] = std::move(o);
  }
  if (inst.augmentation) j["augmentation"] = augmentation_to_json(*inst.augmentation);
  if (inst.roles) {
    nlohmann::json roles = nlohmann::json::array();
    for (Role role : *inst.roles) roles.push_back(to_string(role));
    j["roles"] = std::move(roles);
  }
  if (inst.degeneracy_bound) j["degeneracy"] = *inst.degeneracy_bound;
  return j;
}

CorpusInstance instance_from_json(const nlohmann::json& j, const std::string& fallback_id) {
  CorpusInstance inst;
  inst.graph = graph_from_json(j);
  try {
    inst.id = j.value("id", fallback_id);
    inst.r = j.value("r", 1);
    if (inst.r < 1) throw InputError("instance radius must be at least 1");
    if (j.contains("ordering")) {
      inst.ordering = ordering_from_json(j.at("ordering"));
      if (inst.ordering->size() != inst.graph.n()) throw InputError("ordering size differs from the graph");
    }
    if (j.contains("orientation")) {
      std::vector<Edge> o;
      for (const auto& arc : j.at("orientation")) o.emplace_back(arc.at(0).get<Vertex>(), arc.at(1).get<Vertex>());
      inst.orientation = std::move(o);
    }
    if (j.contains("augmentation")) inst.augmentation = augmentation_from_json(j.at("augmentation"), inst.graph.n());
    if (j.contains("roles")) {
      std::vector<Role> roles;
      for (const auto& s : j.at("roles")) roles.push_back(parse_role(s.get<std::string>()));
      if (static_cast<int>(roles.size()) != inst.graph.n()) throw InputError("roles size differs from the graph");
      inst.roles = std::move(roles);
    }
    if (j.contains("degeneracy")) inst.degeneracy_bound = j.at("degeneracy").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad instance field: ") + e.what());
  }
  return inst;
}

CorpusInstance load_instance(const std::string& path) {
  auto stem = path.substr(path.find_last_of('/') + 1);
  if (auto dot = stem.find_last_of('.'); dot != std::string::npos) stem = stem.substr(0, dot);
  if (format_for_path(path) == GraphFormat::Json) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
      // Reuse the graph parser's line reporting.
      parse_graph_string(buf.str(), GraphFormat::Json);
      throw ParseError(1, e.what());
    }
    return instance_from_json(j, stem);
  }
  CorpusInstance inst;
  inst.id = stem;
  inst.graph = load_graph(path);
  return inst;
}

}  // namespace distdom
