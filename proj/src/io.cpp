#include "graphalg/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace graphalg {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError(std::string("expected an object with key \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing key \"") + key + "\"");
  return *it;
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) throw InputError(std::string("\"") + key + "\" must be an array");
  return a;
}

std::string string_of(const Json& j, const char* what) {
  if (!j.is_string()) throw InputError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

Word word_of(const Graph& g, const Json& ids) {
  if (!ids.is_array()) throw InputError("word must be an array of edge ids");
  Word out;
  for (const auto& id : ids) out.push_back(index(g.edge(string_of(id, "edge id"))));
  return out;
}

Json integer_json(const Integer& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(c);
  }
  return c.str();
}

Integer integer_of(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw InputError("coefficient must be an integer");
}

Json pair_json(const Graph& g, const Pair& p) { return {{"mu", to_json(g, p.mu)}, {"nu", to_json(g, p.nu)}}; }

Json walk_json(const CodingGraph& cg, const CodingPath& p) {
  Json out = Json::array({vertex_text(cg, p.start)});
  for (std::size_t e : p.edges) out.push_back(vertex_text(cg, cg.edge(e).target));
  return out;
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const Graph& g) {
  Json vertices = Json::array();
  for (Vertex v : g.vertices()) vertices.push_back(g.vertex_id(v));
  Json edges = Json::array();
  for (Edge e : g.edges()) {
    edges.push_back({{"id", g.edge_id(e)}, {"src", g.vertex_id(g.source(e))}, {"dst", g.vertex_id(g.range(e))}});
  }
  return {{"vertices", vertices}, {"edges", edges}};
}

GraphPtr graph_from_json(const Json& j) {
  std::vector<std::string> vertices;
  for (const auto& v : array_field(j, "vertices")) vertices.push_back(string_of(v, "vertex id"));
  std::vector<EdgeSpec> edges;
  for (const auto& e : array_field(j, "edges")) {
    edges.push_back({string_of(field(e, "id"), "edge id"), string_of(field(e, "src"), "edge source"),
                     string_of(field(e, "dst"), "edge target")});
  }
  return std::make_shared<const Graph>(Graph::from_lists(std::move(vertices), edges));
}

Json to_json(const Graph& g, const Path& p) {
  Json edges = Json::array();
  for (Edge e : p.edges()) edges.push_back(g.edge_id(e));
  return {{"anchor", g.vertex_id(p.source())}, {"edges", edges}};
}

Path path_from_json(const Graph& g, const Json& j) {
  std::vector<Edge> edges;
  for (const auto& id : array_field(j, "edges")) edges.push_back(g.edge(string_of(id, "edge id")));
  if (j.contains("anchor")) {
    Vertex anchor = g.vertex(string_of(j["anchor"], "anchor"));
    if (edges.empty()) return Path::vertex(anchor);
    if (g.source(edges.front()) != anchor) throw PathError("anchor is not the source of the first edge");
    return Path::from_edges(g, anchor, std::move(edges));
  }
  if (edges.empty()) throw InputError("a vertex path needs an anchor");
  return Path::from_edges(g, std::move(edges));
}

Json to_json(const AlgebraElement& a) {
  Json terms = Json::array();
  for (const auto& [m, c] : a.terms()) {
    terms.push_back({{"coeff", integer_json(c)}, {"mu", to_json(a.g(), m.mu)}, {"nu", to_json(a.g(), m.nu)}});
  }
  return {{"terms", terms}};
}

AlgebraElement element_from_json(const GraphPtr& graph, const Json& j) {
  std::vector<Term> raw;
  for (const auto& t : array_field(j, "terms")) {
    raw.push_back({integer_of(field(t, "coeff")), {path_from_json(*graph, field(t, "mu")),
                                                   path_from_json(*graph, field(t, "nu"))}});
  }
  return AlgebraElement::normal_form(graph, std::move(raw));
}

Json to_json(const PairSet& j) {
  Json pairs = Json::array();
  for (const auto& p : j.pairs()) pairs.push_back(pair_json(j.g(), p));
  return {{"pairs", pairs}};
}

PairSet pairset_from_json(const GraphPtr& graph, const Json& j) {
  if (j.is_object() && j.contains("terms") && !j.contains("pairs")) {
    return element_to_pairset(element_from_json(graph, j));
  }
  std::vector<Pair> pairs;
  for (const auto& p : array_field(j, "pairs")) {
    pairs.push_back({path_from_json(*graph, field(p, "mu")), path_from_json(*graph, field(p, "nu"))});
  }
  return PairSet::build(graph, std::move(pairs));
}

Json to_json(const Graph& g, const EventuallyPeriodicWord& w) {
  return {{"prefix", word_ids(g, w.prefix)}, {"period", word_ids(g, w.period)}};
}

EventuallyPeriodicWord word_from_json(const Graph& g, const Json& j) {
  return EventuallyPeriodicWord::make(word_of(g, field(j, "prefix")), word_of(g, field(j, "period")));
}

Json to_json(const Graph& g, const SplitRound& r) {
  return {{"round", r.round},
          {"split", pair_json(g, r.split)},
          {"negative_edges", r.negative_edges},
          {"classification", to_string(r.before)}};
}

std::string trace_jsonl(const SplitResult& r) {
  std::string out;
  for (const auto& round : r.trace) out += to_json(r.j.g(), round).dump() + "\n";
  return out;
}

Json coding_summary(const CodingGraph& cg) {
  Json vertices = Json::array();
  for (std::size_t v = 0; v < cg.vertex_count(); ++v) vertices.push_back(vertex_text(cg, v));
  Json edges = Json::array();
  for (const auto& e : cg.edges()) {
    edges.push_back({{"source", vertex_text(cg, e.source)},
                     {"target", vertex_text(cg, e.target)},
                     {"label", label_text(cg.g(), e.label)},
                     {"degree", edge_degree(e)}});
  }
  return {{"vertices", vertices}, {"edges", edges}, {"classification", to_string(classify(cg).kind)}};
}

Json to_json(const DiagonalVerdict& v) {
  const CodingGraph& cg = v.split.graph;
  Json out{{"outcome", to_string(v.outcome)}};
  if (v.delay) out["delay"] = *v.delay;
  if (v.outcome != Outcome::Auto) {
    Json cycles = Json::array();
    if (v.cycle) cycles.push_back(walk_json(cg, *v.cycle));
    if (v.cycles) {
      cycles.push_back(walk_json(cg, v.cycles->first));
      cycles.push_back(walk_json(cg, v.cycles->second));
    }
    out["witness"] = {{"mu", to_json(cg.g(), not_in_image_witness(v))}, {"cycles", cycles}};
  }
  Json splits = Json::array();
  for (const auto& r : v.split.trace) splits.push_back(to_json(cg.g(), r));
  out["splits"] = splits;
  return out;
}

}  // namespace graphalg
