#include "graphalg/splitting.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>

namespace graphalg {

std::size_t default_fuel() {
  if (const char* env = std::getenv("GRAPHALG_FUEL")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 10000;
}

namespace {

bool emits_only_positive(const CodingGraph& cg, std::size_t v) {
  const auto& out = cg.out_edges(v);
  return !out.empty() && std::all_of(out.begin(), out.end(), [&](std::size_t e) { return edge_degree(cg.edge(e)) > 0; });
}

std::vector<Pair> split_pairs(const PairSet& j, std::size_t pair_index) {
  const Graph& g = j.g();
  const Pair& x = j.pairs().at(pair_index);
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (i != pair_index) pairs.push_back(j.pairs()[i]);
  }
  for (Edge f : g.out_edges(x.mu.range())) pairs.push_back({x.mu.extended(g, f), x.nu.extended(g, f)});
  return pairs;
}

}  // namespace

PairSet split_at(const PairSet& j, std::size_t pair_index) {
  if (pair_index >= j.size()) throw DomainError("split vertex is not a pair of the presentation");
  auto cg = CodingGraph::build(j);
  if (!emits_only_positive(cg, pair_index)) {
    throw DomainError("vertex " + vertex_text(cg, pair_index) + " emits a non-positive edge; it cannot be split");
  }
  return PairSet::build(j.graph(), split_pairs(j, pair_index));
}

PairSet split_at(const PairSet& j, const Pair& pair) {
  auto idx = j.find(pair);
  if (!idx) throw DomainError("split vertex " + to_string(j.g(), pair) + " is not a pair of the presentation");
  return split_at(j, *idx);
}

std::vector<FinalNegativeEdge> final_negative_edges(const CodingGraph& cg) {
  std::vector<FinalNegativeEdge> out;
  for (std::size_t ei = 0; ei < cg.edge_count(); ++ei) {
    if (edge_degree(cg.edge(ei)) >= 0) continue;
    std::size_t at = cg.edge(ei).target;
    std::size_t height = 0;
    std::set<std::size_t> seen;
    for (;;) {
      if (emits_only_positive(cg, at)) {
        out.push_back({ei, at, height});
        break;
      }
      const auto& next = cg.out_edges(at);
      // A vertex emitting a non-positive edge emits nothing else.
      if (next.size() != 1) throw InternalError("vertex " + vertex_text(cg, at) + " mixes non-positive and other edges");
      const auto& e = cg.edge(next.front());
      if (edge_degree(e) < 0 || !seen.insert(at).second) break;
      at = e.target;
      ++height;
    }
  }
  return out;
}

SplitResult run_splitting_algorithm(const PairSet& j, SplitOptions options) {
  const std::size_t fuel = options.fuel ? options.fuel : default_fuel();
  std::mt19937_64 rng(options.seed);
  PairSet cur = j;
  std::vector<SplitRound> trace;
  for (std::size_t round = 1;; ++round) {
    auto cg = CodingGraph::build(cur);
    auto cls = classify(cg);
    if (cls.kind != CodingClass::HasNegativeEdges) return {cur, std::move(cg), std::move(cls), std::move(trace)};
    if (round > fuel) throw FuelExhausted("splitting did not terminate within " + std::to_string(fuel) + " rounds");

    auto finals = final_negative_edges(cg);
    if (finals.empty()) throw InternalError("negative edges present but none is final");
    std::size_t low = finals.front().height;
    for (const auto& f : finals) low = std::min(low, f.height);
    std::set<std::size_t> candidates;
    for (const auto& f : finals) {
      if (f.height == low) candidates.insert(f.destination);
    }
    auto pick = candidates.begin();
    if (options.tie_break == TieBreak::Random) std::advance(pick, static_cast<long>(rng() % candidates.size()));

    auto next = split_at(cur, *pick);
    if (!(next.element() == cur.element())) throw InternalError("splitting changed the unitary");
    trace.push_back({round, cur.pairs()[*pick], cls.negative_edges, cls.kind});
    cur = std::move(next);
  }
}

SplitCheck verify_split_degree_deltas(const PairSet& before, std::size_t pair_index) {
  SplitCheck check;
  auto fail = [&](std::string msg) {
    check.ok = false;
    check.failures.push_back(std::move(msg));
  };
  const Graph& g = before.g();
  const Pair x = before.pairs().at(pair_index);
  auto after = split_at(before, pair_index);
  auto old_cg = CodingGraph::build(before);
  auto new_cg = CodingGraph::build(after);

  std::vector<std::size_t> children;
  for (Edge f : g.out_edges(x.mu.range())) {
    auto c = new_cg.find_vertex(x.mu.extended(g, f), x.nu.extended(g, f));
    if (!c) {
      fail("missing child vertex");
      return check;
    }
    children.push_back(*c);
  }
  std::vector<std::size_t> image(old_cg.vertex_count(), 0);
  for (std::size_t v = 0; v < old_cg.vertex_count(); ++v) {
    if (v == pair_index) continue;
    auto w = new_cg.find_vertex(old_cg.vertex(v).mu, old_cg.second_component(v));
    if (!w) {
      fail("vertex " + vertex_text(old_cg, v) + " disappeared");
      return check;
    }
    image[v] = *w;
  }
  auto degree_of = [&](std::size_t s, std::size_t t) -> std::optional<long> {
    if (auto e = new_cg.find_edge(s, t)) return edge_degree(new_cg.edge(*e));
    return std::nullopt;
  };

  std::size_t expected_child_edges = 0;
  std::size_t untouched = 0;
  for (const auto& e : old_cg.edges()) {
    const long d = edge_degree(e);
    const bool from_x = e.source == pair_index;
    const bool to_x = e.target == pair_index;
    std::string name = vertex_text(old_cg, e.source) + "->" + vertex_text(old_cg, e.target);
    if (!from_x && !to_x) {
      ++untouched;
      auto ne = new_cg.find_edge(image[e.source], image[e.target]);
      if (!ne || !(new_cg.edge(*ne).label == e.label)) fail("edge " + name + " changed");
    } else if (from_x && !to_x) {  // SE1
      std::size_t hits = 0;
      for (std::size_t c : children) {
        if (auto nd = degree_of(c, image[e.target])) {
          ++hits;
          if (*nd != d - 1) fail("SE1 degree on " + name);
        }
      }
      if (hits != 1) fail("SE1 descendant count on " + name);
      expected_child_edges += 1;
    } else if (from_x && to_x) {  // SE2
      std::size_t full = 0;
      for (std::size_t c : children) {
        bool all = true;
        for (std::size_t b : children) {
          auto nd = degree_of(c, b);
          if (!nd) {
            all = false;
            continue;
          }
          if (*nd != d) fail("SE2 degree on " + name);
        }
        full += all ? 1 : 0;
      }
      if (full != 1) fail("SE2 source count on " + name);
      expected_child_edges += children.size();
    } else if (d >= 0) {  // SE3
      for (std::size_t c : children) {
        auto nd = degree_of(image[e.source], c);
        if (!nd || *nd != d + 1) fail("SE3 on " + name);
      }
      expected_child_edges += children.size();
    } else {  // SE4
      std::size_t hits = 0;
      for (std::size_t c : children) {
        if (auto nd = degree_of(image[e.source], c)) {
          ++hits;
          if (*nd != d + 1) fail("SE4 degree on " + name);
        }
      }
      if (hits != 1) fail("SE4 descendant count on " + name);
      expected_child_edges += 1;
    }
  }

  std::set<std::size_t> child_set(children.begin(), children.end());
  std::size_t child_edges = 0;
  std::size_t other_edges = 0;
  for (const auto& e : new_cg.edges()) {
    if (child_set.count(e.source) || child_set.count(e.target)) {
      ++child_edges;
    } else {
      ++other_edges;
    }
  }
  if (child_edges != expected_child_edges) fail("unexplained edges at the split vertices");
  if (other_edges != untouched) fail("edges away from the split vertex changed");
  return check;
}

}  // namespace graphalg
