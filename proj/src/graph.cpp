#include "graphalg/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace graphalg {

Graph Graph::from_lists(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges) {
  Graph g;
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (vertices[i] == vertices[i - 1]) {
      throw GraphError("duplicate vertex id '" + vertices[i] + "'", vertices[i]);
    }
  }
  g.vertex_ids_ = std::move(vertices);

  std::vector<const EdgeSpec*> sorted;
  sorted.reserve(edges.size());
  for (const auto& e : edges) sorted.push_back(&e);
  std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return a->id < b->id; });

  g.out_.resize(g.vertex_ids_.size());
  g.in_.resize(g.vertex_ids_.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const EdgeSpec& spec = *sorted[i];
    if (i > 0 && spec.id == sorted[i - 1]->id) {
      throw GraphError("duplicate edge id '" + spec.id + "'", spec.id);
    }
    if (spec.id.empty()) throw GraphError("empty edge id", spec.id);
    auto src = g.find_vertex(spec.src);
    auto dst = g.find_vertex(spec.dst);
    if (!src) throw GraphError("edge '" + spec.id + "' has undeclared source '" + spec.src + "'", spec.id);
    if (!dst) throw GraphError("edge '" + spec.id + "' has undeclared range '" + spec.dst + "'", spec.id);
    Edge e{static_cast<std::uint32_t>(i)};
    g.edges_.push_back({spec.id, *src, *dst});
    g.out_[index(*src)].push_back(e);
    g.in_[index(*dst)].push_back(e);
    if (spec.id.size() != 1) g.compact_ids_ = false;
  }
  return g;
}

std::optional<Vertex> Graph::find_vertex(std::string_view id) const {
  auto it = std::lower_bound(vertex_ids_.begin(), vertex_ids_.end(), id);
  if (it == vertex_ids_.end() || *it != id) return std::nullopt;
  return Vertex{static_cast<std::uint32_t>(it - vertex_ids_.begin())};
}

std::optional<Edge> Graph::find_edge(std::string_view id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const EdgeRecord& r, std::string_view k) { return r.id < k; });
  if (it == edges_.end() || it->id != id) return std::nullopt;
  return Edge{static_cast<std::uint32_t>(it - edges_.begin())};
}

Vertex Graph::vertex(std::string_view id) const {
  if (auto v = find_vertex(id)) return *v;
  throw InputError("unknown vertex '" + std::string(id) + "'");
}

Edge Graph::edge(std::string_view id) const {
  if (auto e = find_edge(id)) return *e;
  throw InputError("unknown edge '" + std::string(id) + "'");
}

Edge Graph::special_edge(Vertex v) const {
  const auto& out = out_.at(index(v));
  if (out.empty()) throw DomainError("vertex '" + vertex_id(v) + "' is a sink");
  return out.front();
}

std::vector<Vertex> Graph::vertices() const {
  std::vector<Vertex> vs;
  for (std::size_t i = 0; i < vertex_ids_.size(); ++i) vs.push_back(Vertex{static_cast<std::uint32_t>(i)});
  return vs;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < edges_.size(); ++i) es.push_back(Edge{static_cast<std::uint32_t>(i)});
  return es;
}

bool Graph::operator==(const Graph& other) const {
  if (vertex_ids_ != other.vertex_ids_ || edges_.size() != other.edges_.size()) return false;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& a = edges_[i];
    const auto& b = other.edges_[i];
    if (a.id != b.id || a.source != b.source || a.range != b.range) return false;
  }
  return true;
}

Path Path::from_edges(const Graph& g, std::vector<Edge> edges) {
  if (edges.empty()) throw PathError("an edge-less path needs an explicit anchor");
  Vertex anchor = g.source(edges.front());
  return from_edges(g, anchor, std::move(edges));
}

Path Path::from_edges(const Graph& g, Vertex anchor, std::vector<Edge> edges) {
  Vertex at = anchor;
  for (Edge e : edges) {
    if (g.source(e) != at) {
      throw PathError("edge '" + g.edge_id(e) + "' does not start at vertex '" + g.vertex_id(at) + "'");
    }
    at = g.range(e);
  }
  return Path(anchor, std::move(edges), at);
}

Path Path::extended(const Graph& g, Edge e) const {
  if (g.source(e) != range_) {
    throw PathError("cannot extend a path ending at '" + g.vertex_id(range_) + "' by edge '" + g.edge_id(e) + "'");
  }
  auto edges = edges_;
  edges.push_back(e);
  return Path(anchor_, std::move(edges), g.range(e));
}

Path Path::without_last(const Graph& g) const {
  if (edges_.empty()) throw DomainError("cannot drop an edge from a vertex path");
  auto edges = edges_;
  Vertex range = g.source(edges.back());
  edges.pop_back();
  return Path(anchor_, std::move(edges), range);
}

Path Path::slice(const Graph& g, std::size_t from, std::size_t count) const {
  if (from + count > edges_.size()) throw DomainError("path slice out of bounds");
  if (count == 0) {
    Vertex at = from < edges_.size() ? g.source(edges_[from]) : range_;
    return vertex(at);
  }
  std::vector<Edge> edges(edges_.begin() + static_cast<std::ptrdiff_t>(from),
                          edges_.begin() + static_cast<std::ptrdiff_t>(from + count));
  Vertex anchor = g.source(edges.front());
  Vertex range = g.range(edges.back());
  return Path(anchor, std::move(edges), range);
}

std::strong_ordering Path::operator<=>(const Path& o) const {
  if (auto c = std::lexicographical_compare_three_way(edges_.begin(), edges_.end(), o.edges_.begin(),
                                                      o.edges_.end());
      c != 0) {
    return c;
  }
  return anchor_ <=> o.anchor_;
}

Path concat(const Path& a, const Path& b) {
  if (a.range_ != b.anchor_) throw PathError("range/source mismatch in path concatenation");
  auto edges = a.edges_;
  edges.insert(edges.end(), b.edges_.begin(), b.edges_.end());
  return Path(a.anchor_, std::move(edges), b.range_);
}

bool is_prefix(const Path& a, const Path& b) {
  if (a.source() != b.source() || a.length() > b.length()) return false;
  return std::equal(a.edges().begin(), a.edges().end(), b.edges().begin());
}

std::optional<Path> strip_prefix(const Path& prefix, const Path& p) {
  if (!is_prefix(prefix, p)) return std::nullopt;
  std::vector<Edge> rest(p.edges_.begin() + static_cast<std::ptrdiff_t>(prefix.length()), p.edges_.end());
  return Path(prefix.range_, std::move(rest), p.range_);
}

std::vector<Path> paths_from(const Graph& g, Vertex v, std::size_t k) {
  if (index(v) >= g.vertex_count()) throw InputError("unknown vertex index");
  std::vector<Path> layer{Path::vertex(v)};
  for (std::size_t step = 0; step < k; ++step) {
    std::vector<Path> next;
    for (const auto& p : layer) {
      for (Edge e : g.out_edges(p.range())) next.push_back(p.extended(g, e));
    }
    layer = std::move(next);
  }
  return layer;
}

namespace {

// Walks the cylinder tree below `at`. Each node either is exactly one member
// (and then no other member may extend it), or is strictly below some member
// and must be split further.
bool covers_exactly_once(const Graph& g, const Path& at, std::vector<const Path*> below) {
  std::size_t equal = 0;
  for (const Path* p : below) {
    if (p->length() == at.length()) ++equal;
  }
  if (equal > 0) return equal == 1 && below.size() == 1;
  if (below.empty()) return false;
  for (Edge e : g.out_edges(at.range())) {
    Path child = at.extended(g, e);
    std::vector<const Path*> sub;
    for (const Path* p : below) {
      if (p->edges()[at.length()] == e) sub.push_back(p);
    }
    if (!covers_exactly_once(g, child, std::move(sub))) return false;
  }
  return true;
}

}  // namespace

bool is_partition(const Graph& g, Vertex v, std::span<const Path> ps) {
  std::vector<const Path*> members;
  for (const auto& p : ps) {
    if (p.source() != v) throw DomainError("path is not anchored at vertex '" + g.vertex_id(v) + "'");
    members.push_back(&p);
  }
  if (g.out_edges(v).empty() && members.size() == 1 && members.front()->is_vertex()) return true;
  return covers_exactly_once(g, Path::vertex(v), std::move(members));
}

bool is_partition_of_path(const Graph& g, const Path& nu, std::span<const Path> ps) {
  std::vector<Path> rests;
  for (const auto& p : ps) {
    auto rest = strip_prefix(nu, p);
    if (!rest) return false;
    rests.push_back(std::move(*rest));
  }
  return is_partition(g, nu.range(), rests);
}

bool is_partition_of_unity(const Graph& g, std::span<const Path> ps) {
  std::vector<std::vector<Path>> by_vertex(g.vertex_count());
  for (const auto& p : ps) by_vertex[index(p.source())].push_back(p);
  for (Vertex v : g.vertices()) {
    if (!is_partition(g, v, by_vertex[index(v)])) return false;
  }
  return true;
}

ValidationReport validate_standing_assumptions(const Graph& g) {
  ValidationReport report;
  for (Vertex v : g.vertices()) {
    if (g.out_edges(v).empty()) report.sinks.push_back(v);
    if (g.in_edges(v).empty()) report.sources.push_back(v);
  }
  report.has_sink = !report.sinks.empty();
  report.has_source = !report.sources.empty();

  // A cycle has no exit iff every vertex on it emits exactly one edge, so
  // look for a cycle in the functional graph of out-degree-one vertices.
  std::vector<int> state(g.vertex_count(), 0);  // 0 new, 1 on stack, 2 done
  for (Vertex start : g.vertices()) {
    if (state[index(start)] != 0) continue;
    std::vector<Vertex> trail;
    Vertex at = start;
    while (true) {
      if (g.out_edges(at).size() != 1 || state[index(at)] == 2) break;
      if (state[index(at)] == 1) {
        auto it = std::find(trail.begin(), trail.end(), at);
        std::vector<Edge> cycle;
        for (; it != trail.end(); ++it) cycle.push_back(g.out_edges(*it).front());
        report.cycle_without_exit = true;
        report.exitless_cycle = Path::from_edges(g, std::move(cycle));
        break;
      }
      state[index(at)] = 1;
      trail.push_back(at);
      at = g.range(g.out_edges(at).front());
    }
    for (Vertex t : trail) state[index(t)] = 2;
    if (report.cycle_without_exit) break;
  }
  return report;
}

std::string format_path(const Graph& g, const Path& p) {
  if (p.is_vertex()) return "@" + g.vertex_id(p.source());
  std::string out;
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i > 0 && !g.compact_ids()) out += '.';
    out += g.edge_id(p.edges()[i]);
  }
  return out;
}

Path parse_path(const Graph& g, std::string_view text) {
  if (text.empty()) throw InputError("empty path text");
  if (text.front() == '@') return Path::vertex(g.vertex(text.substr(1)));
  std::vector<Edge> edges;
  if (text.find('.') != std::string_view::npos || !g.compact_ids()) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto dot = text.find('.', pos);
      if (dot == std::string_view::npos) dot = text.size();
      edges.push_back(g.edge(text.substr(pos, dot - pos)));
      pos = dot + 1;
    }
  } else {
    for (char c : text) edges.push_back(g.edge(std::string_view(&c, 1)));
  }
  return Path::from_edges(g, std::move(edges));
}

}  // namespace graphalg
