#include "distdom/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>

#include "distdom/error.hpp"

namespace distdom {

using nlohmann::json;

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::vector<char> VertexSet::mask(int n) const {
  std::vector<char> m(static_cast<std::size_t>(n), 0);
  for (Vertex v : members_) {
    if (v < 0 || v >= n) throw InputError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
    m[static_cast<std::size_t>(v)] = 1;
  }
  return m;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges, std::vector<std::string> labels) {
  if (n < 0) throw InputError("negative vertex count");
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(n))
    throw InputError("label table has " + std::to_string(labels.size()) + " entries for " +
                     std::to_string(n) + " vertices");
  Graph g;
  g.adjacency_.resize(static_cast<std::size_t>(n));
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
    g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nbrs : g.adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    g.edge_count_ += nbrs.size();
  }
  g.edge_count_ /= 2;
  g.labels_ = std::move(labels);
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::check_vertex(Vertex v) const {
  if (!valid_vertex(v))
    throw InputError("invalid vertex id " + std::to_string(v) + " (graph has " + std::to_string(n()) +
                     " vertices)");
}

std::vector<int> distances_from(const Graph& g, Vertex source, int max_depth) {
  g.check_vertex(source);
  std::vector<int> dist(static_cast<std::size_t>(g.n()), kUnreachable);
  std::deque<Vertex> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    int dx = dist[static_cast<std::size_t>(x)];
    if (dx >= max_depth) continue;
    for (Vertex y : g.neighbors(x)) {
      if (dist[static_cast<std::size_t>(y)] == kUnreachable) {
        dist[static_cast<std::size_t>(y)] = dx + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

int distance(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(v);
  return distances_from(g, u)[static_cast<std::size_t>(v)];
}

VertexSet ball(const Graph& g, Vertex v, int r) {
  if (r < 0) throw InputError("negative radius");
  auto dist = distances_from(g, v, r);
  std::vector<Vertex> members;
  for (Vertex u = 0; u < g.n(); ++u)
    if (dist[static_cast<std::size_t>(u)] <= r) members.push_back(u);
  return VertexSet(std::move(members));
}

BallTable::BallTable(const Graph& g, int r) : radius_(r) {
  balls_.reserve(static_cast<std::size_t>(g.n()));
  for (Vertex v = 0; v < g.n(); ++v) balls_.push_back(distdom::ball(g, v, r));
}

bool within_distance_of_set(const Graph& g, Vertex v, int r, const std::vector<char>& in_set) {
  if (in_set[static_cast<std::size_t>(v)]) return true;
  std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
  std::deque<Vertex> queue{v};
  dist[static_cast<std::size_t>(v)] = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    if (dist[static_cast<std::size_t>(x)] >= r) continue;
    for (Vertex y : g.neighbors(x)) {
      if (dist[static_cast<std::size_t>(y)] >= 0) continue;
      if (in_set[static_cast<std::size_t>(y)]) return true;
      dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
      queue.push_back(y);
    }
  }
  return false;
}

bool is_r_dominating(const Graph& g, const VertexSet& set, int r) {
  // Multi-source BFS from the set.
  std::vector<int> dist(static_cast<std::size_t>(g.n()), kUnreachable);
  std::deque<Vertex> queue;
  for (Vertex s : set) {
    g.check_vertex(s);
    dist[static_cast<std::size_t>(s)] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    int dx = dist[static_cast<std::size_t>(x)];
    if (dx >= r) continue;
    for (Vertex y : g.neighbors(x)) {
      if (dist[static_cast<std::size_t>(y)] == kUnreachable) {
        dist[static_cast<std::size_t>(y)] = dx + 1;
        queue.push_back(y);
      }
    }
  }
  return std::all_of(dist.begin(), dist.end(), [r](int d) { return d <= r; });
}

bool is_2r_independent(const Graph& g, const VertexSet& set, int r) {
  for (Vertex y : set) {
    auto dist = distances_from(g, y, 2 * r);
    for (Vertex z : set)
      if (z != y && dist[static_cast<std::size_t>(z)] <= 2 * r) return false;
  }
  return true;
}

// --- parsing -----------------------------------------------------------------

namespace {

Graph parse_dimacs(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  int n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      long long nv = -1, ne = -1;
      if (!(fields >> kind >> nv >> ne) || (kind != "edge" && kind != "col") || nv < 0 || ne < 0)
        throw ParseError(line_no, "malformed problem line '" + line + "'");
      if (n >= 0) throw ParseError(line_no, "duplicate problem line");
      n = static_cast<int>(nv);
      edges.reserve(static_cast<std::size_t>(ne));
    } else if (tag == "e") {
      if (n < 0) throw ParseError(line_no, "edge line before problem line");
      long long u = 0, v = 0;
      std::string rest;
      if (!(fields >> u >> v) || (fields >> rest))
        throw ParseError(line_no, "malformed edge line '" + line + "'");
      if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError(line_no, "vertex id out of range 1.." + std::to_string(n));
      if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    } else {
      throw ParseError(line_no, "unknown line type '" + tag + "'");
    }
  }
  if (n < 0) throw ParseError(line_no, "missing problem line");
  return Graph::from_edges(n, edges);
}

std::size_t line_of_offset(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

}  // namespace

Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw InputError("graph JSON needs keys \"n\" and \"edges\"");
  if (!j["n"].is_number_integer()) throw InputError("\"n\" must be an integer");
  int n = j["n"].get<int>();
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw InputError("edge entries must be [u, v] integer pairs");
    edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  }
  std::vector<std::string> labels;
  if (j.contains("labels") && !j["labels"].is_null()) {
    for (const auto& label : j["labels"]) labels.push_back(label.is_string() ? label.get<std::string>() : label.dump());
  }
  return Graph::from_edges(n, edges, std::move(labels));
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  json j = {{"n", g.n()}, {"edges", std::move(edges)}};
  if (g.has_labels()) j["labels"] = g.labels();
  return j;
}

Graph parse_graph_string(const std::string& text, GraphFormat format) {
  if (format == GraphFormat::DimacsEdge) {
    std::istringstream in(text);
    return parse_dimacs(in);
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0), e.what());
  }
  try {
    return graph_from_json(j);
  } catch (const InputError& e) {
    throw ParseError(1, e.what());
  }
}

Graph parse_graph(std::istream& in, GraphFormat format) {
  if (format == GraphFormat::DimacsEdge) return parse_dimacs(in);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph_string(buffer.str(), format);
}

GraphFormat format_for_path(const std::string& path) {
  auto dot = path.rfind('.');
  if (dot != std::string::npos && path.substr(dot) == ".json") return GraphFormat::Json;
  return GraphFormat::DimacsEdge;
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse_graph(in, format_for_path(path));
}

std::string to_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.n() << ' ' << g.m() << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << (u + 1) << ' ' << (v + 1) << '\n';
  return out.str();
}

}  // namespace distdom
