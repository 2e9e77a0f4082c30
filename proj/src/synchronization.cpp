#include "graphalg/synchronization.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace graphalg {

PairGraph PairGraph::build(const CodingGraph& cg, bool ordered) {
  PairGraph pg;
  pg.ordered_ = ordered;
  auto key = [&](std::size_t x, std::size_t y) {
    return ordered || x < y ? std::pair{x, y} : std::pair{y, x};
  };
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  for (std::size_t x = 0; x < cg.vertex_count(); ++x) {
    for (std::size_t y = 0; y < cg.vertex_count(); ++y) {
      if (x == y || (!ordered && y < x) || cg.vertex(x).e != cg.vertex(y).e) continue;
      index.emplace(std::pair{x, y}, pg.vertices_.size());
      pg.vertices_.emplace_back(x, y);
    }
  }
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < pg.vertices_.size(); ++i) {
    auto [x, y] = pg.vertices_[i];
    for (std::size_t ex : cg.out_edges(x)) {
      for (std::size_t ey : cg.out_edges(y)) {
        auto it = index.find(key(cg.edge(ex).target, cg.edge(ey).target));
        if (it != index.end()) edges.emplace(i, it->second);
      }
    }
  }
  pg.edges_.assign(edges.begin(), edges.end());
  pg.succ_.resize(pg.vertices_.size());
  for (auto [a, b] : pg.edges_) pg.succ_[a].push_back(b);
  return pg;
}

std::string to_dot(const PairGraph& pg, const CodingGraph& cg) {
  std::ostringstream os;
  os << "digraph pairs {\n";
  const char* open = pg.ordered() ? "(" : "{";
  const char* close = pg.ordered() ? ")" : "}";
  for (std::size_t i = 0; i < pg.vertex_count(); ++i) {
    auto [x, y] = pg.vertices()[i];
    os << "  p" << i << " [label=\"" << open << vertex_text(cg, x) << ", " << vertex_text(cg, y) << close
       << "\"];\n";
  }
  for (auto [a, b] : pg.edges()) os << "  p" << a << " -> p" << b << ";\n";
  os << "}\n";
  return os.str();
}

namespace {

CodingPath closed_walk(const CodingGraph& cg, const std::vector<std::size_t>& vertices) {
  CodingPath p{vertices.front(), {}};
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    auto e = cg.find_edge(vertices[i], vertices[(i + 1) % vertices.size()]);
    if (!e) throw InternalError("pair graph edge without coding edges");
    p.edges.push_back(*e);
  }
  return p;
}

}  // namespace

SyncResult is_left_synchronizing(const CodingGraph& cg) {
  if (classify(cg).kind != CodingClass::AllNonNegative) {
    throw DomainError("synchronization is decided only for coding graphs with non-negative edges; split first");
  }
  // Paths in the ordered pair graph are exactly pairs of E-equal coding
  // paths with distinct sources: left-resolving keeps the components apart.
  auto pg = PairGraph::build(cg, true);
  SyncResult out;
  if (pg.vertex_count() == 0) {
    out.synchronizing = true;
    return out;
  }
  enum : int { kNew, kActive, kDone };
  std::vector<int> state(pg.vertex_count(), kNew);
  std::vector<std::size_t> longest(pg.vertex_count(), 0);
  std::vector<std::size_t> stack;
  std::optional<std::vector<std::size_t>> cycle;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    state[v] = kActive;
    stack.push_back(v);
    for (std::size_t w : pg.successors(v)) {
      if (cycle) return;
      if (state[w] == kActive) {
        auto from = std::find(stack.begin(), stack.end(), w);
        cycle.emplace(from, stack.end());
        return;
      }
      if (state[w] == kNew) visit(w);
      if (cycle) return;
      longest[v] = std::max(longest[v], longest[w] + 1);
    }
    stack.pop_back();
    state[v] = kDone;
  };
  for (std::size_t v = 0; v < pg.vertex_count() && !cycle; ++v) {
    if (state[v] == kNew) visit(v);
  }
  if (cycle) {
    std::vector<std::size_t> xs;
    std::vector<std::size_t> ys;
    for (std::size_t p : *cycle) {
      xs.push_back(pg.vertices()[p].first);
      ys.push_back(pg.vertices()[p].second);
    }
    out.witness = CycleWitness{closed_walk(cg, xs), closed_walk(cg, ys)};
    return out;
  }
  out.synchronizing = true;
  out.delay = *std::max_element(longest.begin(), longest.end()) + 1;
  return out;
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Auto: return "auto";
    case Outcome::NotAutoNonPositiveCycle: return "not_auto_nonpositive_cycle";
    case Outcome::NotAutoNotSynchronizing: return "not_auto_not_synchronizing";
  }
  return "?";
}

std::string to_string(OntoResult r) {
  return r == OntoResult::InImage ? "in_image" : "not_in_image_up_to_depth";
}

DiagonalVerdict diagonal_verdict(const PairSet& j, SplitOptions options) {
  auto split = run_splitting_algorithm(j, options);
  if (split.classification.kind == CodingClass::HasNonPositiveCycle) {
    auto cycle = split.classification.witness;
    return {Outcome::NotAutoNonPositiveCycle, std::nullopt, std::move(cycle), std::nullopt, std::move(split)};
  }
  auto sync = is_left_synchronizing(split.graph);
  if (sync.synchronizing) return {Outcome::Auto, sync.delay, std::nullopt, std::nullopt, std::move(split)};
  return {Outcome::NotAutoNotSynchronizing, std::nullopt, std::nullopt, std::move(sync.witness), std::move(split)};
}

Path not_in_image_witness(const DiagonalVerdict& verdict) {
  const CodingGraph& cg = verdict.split.graph;
  const Graph& g = cg.g();
  switch (verdict.outcome) {
    case Outcome::Auto: throw DomainError("the diagonal is onto; there is no witness");
    case Outcome::NotAutoNotSynchronizing: return cg.vertex(verdict.cycles->first.start).mu;
    case Outcome::NotAutoNonPositiveCycle: break;
  }
  // The compression of the image to P_mu is spanned by P_mu, so any proper
  // subprojection of P_mu is missed.
  Path mu = cg.vertex(verdict.cycle->start).mu;
  for (std::size_t guard = 0; g.out_edges(mu.range()).size() == 1; ++guard) {
    if (guard > g.vertex_count()) throw InternalError("cycle without exit reached");
    mu = mu.extended(g, g.out_edges(mu.range()).front());
  }
  return mu.extended(g, g.out_edges(mu.range()).front());
}

DiagonalImageTable::DiagonalImageTable(const PairSet& j, std::size_t depth) : graph_(j.graph()), depth_(depth) {
  const Graph& g = j.g();
  std::vector<AlgebraElement> step;  // u S_e per edge
  for (Edge e : g.edges()) step.push_back(j.element() * AlgebraElement::path(graph_, Path::edge(g, e)));
  // Lambda(S_{alpha e}) = Lambda(S_alpha) u S_e, walked over the prefix tree.
  std::function<void(const AlgebraElement&, const Path&)> walk = [&](const AlgebraElement& image, const Path& alpha) {
    if (alpha.length() == depth) {
      families_.push_back(diagonal_support(image * adjoint(image)));
      return;
    }
    for (Edge e : g.out_edges(alpha.range())) walk(image * step[static_cast<std::size_t>(e)], alpha.extended(g, e));
  };
  for (Vertex v : g.vertices()) {
    walk(AlgebraElement::projection(graph_, Path::vertex(v)), Path::vertex(v));
  }
}

OntoResult DiagonalImageTable::covers(const Path& mu) const {
  std::vector<Path> inside;
  for (const auto& family : families_) {
    if (family.empty()) continue;
    bool within = std::all_of(family.begin(), family.end(), [&](const Path& b) { return is_prefix(mu, b); });
    if (within) inside.insert(inside.end(), family.begin(), family.end());
  }
  if (inside.empty()) return OntoResult::NotInImageUpToDepth;
  return is_partition_of_path(*graph_, mu, inside) ? OntoResult::InImage : OntoResult::NotInImageUpToDepth;
}

OntoResult diagonal_onto_oracle(const PairSet& j, const Path& mu, std::size_t depth) {
  return DiagonalImageTable(j, depth).covers(mu);
}

AlgebraElement summand_in_image(const PairSet& j, const CodingPath& xi) {
  auto cg = CodingGraph::build(j);
  check_coding_path(cg, xi);
  if (!is_left_synchronizing(cg).synchronizing) throw DomainError("coding graph is not left-synchronizing");
  const Graph& g = j.g();
  Path gamma = ls_path(cg, xi);
  for (std::size_t ei : xi.edges) gamma = concat(gamma, cg.edge(ei).label.path);
  const auto& graph = j.graph();
  auto result = AlgebraElement::projection(graph, gamma) * image_of_path(cg, e_label(cg, xi));
  auto expected = AlgebraElement::path(graph, gamma) * AlgebraElement::path_adjoint(graph, lr_path(cg, xi));
  if (!(result == expected)) {
    throw InternalError("summand " + to_string(expected) + " is not cut out of the image of S_" +
                        format_path(g, e_label(cg, xi)));
  }
  return result;
}

DegreeReport even_degree_obstruction(const PairSet& j) {
  const Graph& g = j.g();
  DegreeReport report;
  report.all_even = true;
  for (Edge e : g.edges()) {
    auto image = lambda_of_path(j, Path::edge(g, e));
    std::vector<long> degrees;
    for (const auto& [d, part] : graded_components(image)) {
      degrees.push_back(d);
      if (d % 2 != 0) report.all_even = false;
    }
    report.degrees.push_back(std::move(degrees));
  }
  report.fires = report.all_even;
  report.message = report.fires ? "every generator image has only even-degree components; the endomorphism is not "
                                  "surjective on L_Z(E)"
                                : "some generator image has an odd-degree component; no parity obstruction";
  return report;
}

}  // namespace graphalg
