#include "graphalg/coding_graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace graphalg {

std::optional<EdgeLabel> edge_label_between(const CodingVertex& from, const CodingVertex& to) {
  if (auto gamma = strip_prefix(from.kappa, to.mu)) {
    if (gamma->is_vertex()) return EdgeLabel{LabelKind::Zero, *gamma};
    return EdgeLabel{LabelKind::Positive, *gamma};
  }
  if (auto gamma = strip_prefix(to.mu, from.kappa)) {
    return EdgeLabel{LabelKind::Negative, *gamma};
  }
  return std::nullopt;
}

CodingGraph::CodingGraph(GraphPtr graph, std::vector<CodingVertex> vertices, std::vector<CodingEdge> edges)
    : graph_(std::move(graph)), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  out_.resize(vertices_.size());
  in_.resize(vertices_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.source >= vertices_.size() || e.target >= vertices_.size()) {
      throw InputError("coding edge endpoint out of range");
    }
    out_[e.source].push_back(i);
    in_[e.target].push_back(i);
  }
}

CodingGraph CodingGraph::build(const PairSet& j) {
  const Graph& g = j.g();
  std::vector<CodingVertex> vertices;
  for (const auto& p : j.pairs()) {
    vertices.push_back({p.mu, p.nu.front(), p.nu.slice(g, 1, p.nu.length() - 1)});
  }
  std::vector<CodingEdge> edges;
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = 0; b < vertices.size(); ++b) {
      if (auto label = edge_label_between(vertices[a], vertices[b])) edges.push_back({a, b, *label});
    }
  }
  return CodingGraph(j.graph(), std::move(vertices), std::move(edges));
}

std::optional<std::size_t> CodingGraph::find_vertex(const Path& mu, const Path& nu) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].mu == mu && second_component(i) == nu) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> CodingGraph::find_edge(std::size_t source, std::size_t target) const {
  for (std::size_t i : out_.at(source)) {
    if (edges_[i].target == target) return i;
  }
  return std::nullopt;
}

Path CodingGraph::second_component(std::size_t i) const {
  const auto& v = vertices_.at(i);
  return concat(Path::edge(*graph_, v.e), v.kappa);
}

long edge_degree(const EdgeLabel& label) {
  long n = static_cast<long>(label.path.length());
  switch (label.kind) {
    case LabelKind::Positive: return n;
    case LabelKind::Zero: return 0;
    case LabelKind::Negative: return -n;
  }
  return 0;
}

AlgebraElement label_element(const GraphPtr& graph, const EdgeLabel& label) {
  switch (label.kind) {
    case LabelKind::Positive: return AlgebraElement::path(graph, label.path);
    case LabelKind::Zero: return AlgebraElement::projection(graph, label.path);
    case LabelKind::Negative: return AlgebraElement::path_adjoint(graph, label.path);
  }
  return AlgebraElement::zero(graph);
}

std::string label_text(const Graph& g, const EdgeLabel& label) {
  switch (label.kind) {
    case LabelKind::Positive: return "S_" + format_path(g, label.path);
    case LabelKind::Zero: return "P_" + g.vertex_id(label.path.source());
    case LabelKind::Negative: return "S_" + format_path(g, label.path) + "^*";
  }
  return "?";
}

std::string to_string(CodingClass c) {
  switch (c) {
    case CodingClass::AllNonNegative: return "all_non_negative";
    case CodingClass::HasNonPositiveCycle: return "has_non_positive_cycle";
    case CodingClass::HasNegativeEdges: return "has_negative_edges";
  }
  return "?";
}

Classification classify(const CodingGraph& cg) {
  Classification out;
  for (const auto& e : cg.edges()) out.negative_edges += edge_degree(e) < 0 ? 1 : 0;

  // Cycle search restricted to edges of degree <= 0.
  enum : int { kNew, kActive, kDone };
  std::vector<int> state(cg.vertex_count(), kNew);
  std::vector<std::size_t> via(cg.vertex_count(), 0);
  std::function<std::optional<CodingPath>(std::size_t)> visit = [&](std::size_t v) -> std::optional<CodingPath> {
    state[v] = kActive;
    for (std::size_t ei : cg.out_edges(v)) {
      const auto& e = cg.edge(ei);
      if (edge_degree(e) > 0) continue;
      if (state[e.target] == kActive) {
        // Walk back from v to e.target along recorded edges.
        std::vector<std::size_t> rev{ei};
        for (std::size_t at = v; at != e.target;) {
          rev.push_back(via[at]);
          at = cg.edge(via[at]).source;
        }
        return CodingPath{e.target, std::vector<std::size_t>(rev.rbegin(), rev.rend())};
      }
      if (state[e.target] == kNew) {
        via[e.target] = ei;
        if (auto found = visit(e.target)) return found;
      }
    }
    state[v] = kDone;
    return std::nullopt;
  };
  for (std::size_t v = 0; v < cg.vertex_count(); ++v) {
    if (state[v] != kNew) continue;
    if (auto cycle = visit(v)) {
      out.kind = CodingClass::HasNonPositiveCycle;
      out.witness = std::move(cycle);
      return out;
    }
  }
  out.kind = out.negative_edges == 0 ? CodingClass::AllNonNegative : CodingClass::HasNegativeEdges;
  return out;
}

void check_coding_path(const CodingGraph& cg, const CodingPath& p) {
  if (p.start >= cg.vertex_count()) throw InputError("coding path starts at an unknown vertex");
  std::size_t at = p.start;
  for (std::size_t ei : p.edges) {
    if (ei >= cg.edge_count() || cg.edge(ei).source != at) throw InputError("not a path in the coding graph");
    at = cg.edge(ei).target;
  }
}

std::size_t path_end(const CodingGraph& cg, const CodingPath& p) {
  return p.edges.empty() ? p.start : cg.edge(p.edges.back()).target;
}

Path e_label(const CodingGraph& cg, const CodingPath& p) {
  check_coding_path(cg, p);
  std::vector<Edge> letters{cg.vertex(p.start).e};
  for (std::size_t ei : p.edges) letters.push_back(cg.vertex(cg.edge(ei).target).e);
  return Path::from_edges(cg.g(), std::move(letters));
}

const Path& ls_path(const CodingGraph& cg, const CodingPath& p) { return cg.vertex(p.start).mu; }

const Path& lr_path(const CodingGraph& cg, const CodingPath& p) { return cg.vertex(path_end(cg, p)).kappa; }

AlgebraElement label_product(const CodingGraph& cg, const CodingPath& p) {
  check_coding_path(cg, p);
  AlgebraElement out = AlgebraElement::projection(cg.graph(), Path::vertex(cg.vertex(p.start).mu.range()));
  for (std::size_t ei : p.edges) out = out * label_element(cg.graph(), cg.edge(ei).label);
  return out;
}

std::vector<CodingPath> paths_with_e_label(const CodingGraph& cg, const Path& alpha,
                                           std::optional<std::size_t> start) {
  if (alpha.is_vertex()) throw DomainError("an E-label has at least one letter");
  const auto& letters = alpha.edges();
  std::vector<CodingPath> out;
  std::function<void(std::size_t, std::size_t, CodingPath&)> grow = [&](std::size_t at, std::size_t depth,
                                                                        CodingPath& cur) {
    if (depth == letters.size()) {
      out.push_back(cur);
      return;
    }
    for (std::size_t ei : cg.out_edges(at)) {
      std::size_t next = cg.edge(ei).target;
      if (cg.vertex(next).e != letters[depth]) continue;
      cur.edges.push_back(ei);
      grow(next, depth + 1, cur);
      cur.edges.pop_back();
    }
  };
  for (std::size_t v = 0; v < cg.vertex_count(); ++v) {
    if (start && *start != v) continue;
    if (cg.vertex(v).e != letters.front()) continue;
    CodingPath cur{v, {}};
    grow(v, 1, cur);
  }
  return out;
}

AlgebraElement image_of_path(const CodingGraph& cg, const Path& alpha) {
  AlgebraElement out(cg.graph());
  for (const auto& w : paths_with_e_label(cg, alpha)) {
    out += AlgebraElement::path(cg.graph(), ls_path(cg, w)) * label_product(cg, w) *
           AlgebraElement::path_adjoint(cg.graph(), lr_path(cg, w));
  }
  return out;
}

AlgebraElement image_of_path(const PairSet& j, const Path& alpha) {
  return image_of_path(CodingGraph::build(j), alpha);
}

AlgebraElement project_image(const CodingGraph& cg, const Path& mu, const Path& delta) {
  std::optional<std::size_t> start;
  for (std::size_t i = 0; i < cg.vertex_count(); ++i) {
    if (cg.vertex(i).mu == mu) start = i;
  }
  if (!start) throw DomainError("path " + format_path(cg.g(), mu) + " is not a first component");
  AlgebraElement out(cg.graph());
  for (const auto& w : paths_with_e_label(cg, delta, start)) {
    out += AlgebraElement::path(cg.graph(), mu) * label_product(cg, w) *
           AlgebraElement::path_adjoint(cg.graph(), lr_path(cg, w));
  }
  return out;
}

ResolvingReport check_resolving(const CodingGraph& cg) {
  ResolvingReport report;
  for (std::size_t v = 0; v < cg.vertex_count(); ++v) {
    const auto& out = cg.out_edges(v);
    for (std::size_t a = 0; a < out.size(); ++a) {
      for (std::size_t b = a + 1; b < out.size(); ++b) {
        if (cg.edge(out[a]).label == cg.edge(out[b]).label) {
          report.right_resolving = false;
          report.right_witnesses.emplace_back(out[a], out[b]);
        }
      }
    }
  }
  if (classify(cg).kind != CodingClass::AllNonNegative) return report;
  report.left_checked = true;
  for (std::size_t v = 0; v < cg.vertex_count(); ++v) {
    const auto& in = cg.in_edges(v);
    for (std::size_t a = 0; a < in.size(); ++a) {
      for (std::size_t b = a + 1; b < in.size(); ++b) {
        // Same target, so equal E-labels means equal source letters.
        if (cg.vertex(cg.edge(in[a]).source).e == cg.vertex(cg.edge(in[b]).source).e) {
          report.left_resolving = false;
          report.left_witnesses.emplace_back(in[a], in[b]);
        }
      }
    }
  }
  return report;
}

std::string vertex_text(const CodingGraph& cg, std::size_t i) {
  return "(" + format_path(cg.g(), cg.vertex(i).mu) + ", " + format_path(cg.g(), cg.second_component(i)) + ")";
}

std::string to_dot(const CodingGraph& cg) {
  const Graph& g = cg.g();
  std::ostringstream os;
  os << "digraph coding {\n";
  os << "  node [shape=record];\n";
  for (std::size_t i = 0; i < cg.vertex_count(); ++i) {
    const auto& v = cg.vertex(i);
    os << "  n" << i << " [label=\"" << g.edge_id(v.e) << " | " << format_path(g, v.mu) << " / "
       << format_path(g, v.kappa) << "\"];\n";
  }
  for (const auto& e : cg.edges()) {
    os << "  n" << e.source << " -> n" << e.target << " [label=\"L=" << label_text(g, e.label)
       << " d=" << edge_degree(e) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace graphalg
