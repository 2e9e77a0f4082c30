#include <random>
#include <set>
#include <tuple>

#include "corpus.hpp"
#include "doctest.h"
#include "graphalg/coding_graph.hpp"
#include "support.hpp"

using namespace testing_support;

namespace {

using EdgeRow = std::tuple<std::string, std::string, std::string, long>;

std::set<EdgeRow> edge_table(const CodingGraph& cg) {
  std::set<EdgeRow> out;
  for (const auto& e : cg.edges()) {
    out.emplace(vertex_text(cg, e.source), vertex_text(cg, e.target), label_text(cg.g(), e.label), edge_degree(e));
  }
  return out;
}

std::size_t vertex_of(const CodingGraph& cg, const char* mu, const char* nu) {
  auto v = cg.find_vertex(P(cg.graph(), mu), P(cg.graph(), nu));
  REQUIRE(v.has_value());
  return *v;
}

CodingPath walk(const CodingGraph& cg, std::vector<std::size_t> vertices) {
  CodingPath p{vertices.front(), {}};
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    auto e = cg.find_edge(vertices[i - 1], vertices[i]);
    REQUIRE(e.has_value());
    p.edges.push_back(*e);
  }
  return p;
}

PairSet intro(const GraphPtr& g) { return pairset(g, {{"1", "22"}, {"21", "21"}, {"22", "1"}}); }
PairSet order_two(const GraphPtr& g) { return pairset(g, {{"122", "122"}, {"11", "121"}, {"121", "11"}, {"2", "2"}}); }
PairSet zero_loop(const GraphPtr& g) { return pairset(g, {{"1", "21"}, {"21", "1"}, {"22", "22"}}); }

}  // namespace

TEST_CASE("coding graph of the three-pair flip") {
  auto g = o2();
  auto cg = CodingGraph::build(intro(g));
  CHECK(cg.vertex_count() == 3);
  CHECK(edge_table(cg) == std::set<EdgeRow>{
                              {"(1, 22)", "(21, 21)", "S_1", 1},
                              {"(1, 22)", "(22, 1)", "S_2", 1},
                              {"(21, 21)", "(1, 22)", "P_v", 0},
                              {"(22, 1)", "(1, 22)", "S_1", 1},
                              {"(22, 1)", "(21, 21)", "S_21", 2},
                              {"(22, 1)", "(22, 1)", "S_22", 2},
                          });
  auto c = classify(cg);
  CHECK(c.kind == CodingClass::AllNonNegative);
  CHECK(c.negative_edges == 0);
  CHECK_FALSE(c.witness.has_value());
}

TEST_CASE("coding graph of the order-two automorphism") {
  auto g = o2();
  auto cg = CodingGraph::build(order_two(g));
  CHECK(cg.vertex_count() == 4);
  CHECK(edge_table(cg) == std::set<EdgeRow>{
                              {"(11, 121)", "(2, 2)", "S_1^*", -1},
                              {"(121, 11)", "(11, 121)", "S_1", 1},
                              {"(121, 11)", "(121, 11)", "S_21", 2},
                              {"(121, 11)", "(122, 122)", "S_22", 2},
                              {"(122, 122)", "(2, 2)", "S_2^*", -1},
                              {"(2, 2)", "(11, 121)", "S_11", 2},
                              {"(2, 2)", "(121, 11)", "S_121", 3},
                              {"(2, 2)", "(122, 122)", "S_122", 3},
                              {"(2, 2)", "(2, 2)", "S_2", 1},
                          });
  auto c = classify(cg);
  CHECK(c.kind == CodingClass::HasNegativeEdges);
  CHECK(c.negative_edges == 2);
}

TEST_CASE("a zero loop is a non-positive cycle") {
  auto g = o2();
  auto cg = CodingGraph::build(zero_loop(g));
  auto c = classify(cg);
  REQUIRE(c.kind == CodingClass::HasNonPositiveCycle);
  REQUIRE(c.witness.has_value());
  CHECK(c.witness->length() >= 1);
  CHECK(path_end(cg, *c.witness) == c.witness->start);
  for (std::size_t e : c.witness->edges) CHECK(edge_degree(cg.edge(e)) <= 0);
  CHECK(to_string(c.kind) == "has_non_positive_cycle");
}

TEST_CASE("the identity has only positive edges") {
  auto g = o2();
  auto cg = CodingGraph::build(pairset(g, {{"1", "1"}, {"2", "2"}}));
  CHECK(cg.edge_count() == 4);
  for (const auto& e : cg.edges()) CHECK(edge_degree(e) == 1);
  CHECK(classify(cg).kind == CodingClass::AllNonNegative);
}

TEST_CASE("labels along a coding path") {
  auto g = o2();
  auto cg = CodingGraph::build(intro(g));
  auto a = vertex_of(cg, "1", "22");
  auto b = vertex_of(cg, "21", "21");
  auto c = vertex_of(cg, "22", "1");
  auto w = walk(cg, {a, b, a, c});
  CHECK(format_path(*g, e_label(cg, w)) == "2221");
  CHECK(format_path(*g, ls_path(cg, w)) == "1");
  CHECK(format_path(*g, lr_path(cg, w)) == "@v");
  CHECK(label_product(cg, w) == s(g, "12"));
  CHECK(label_product(cg, CodingPath{b, {}}) == proj(g, "@v"));
  CHECK(format_path(*g, e_label(cg, CodingPath{c, {}})) == "1");
  CHECK_THROWS_AS(e_label(cg, CodingPath{b, {0}}), InputError);
  CHECK_THROWS_AS(paths_with_e_label(cg, P(g, "@v")), DomainError);
}

TEST_CASE("images of paths are read off the coding graph") {
  auto g = o2();
  for (const auto& j : {intro(g), order_two(g), zero_loop(g)}) {
    auto cg = CodingGraph::build(j);
    for (std::size_t len = 1; len <= 3; ++len) {
      for (const auto& alpha : paths_from(*g, g->vertex("v"), len)) {
        CHECK(image_of_path(cg, alpha) == lambda_apply(j, AlgebraElement::path(g, alpha)));
      }
    }
  }
  auto j = order_two(g);
  CHECK(image_of_path(j, P(g, "1")) == elem(g, {{1, "122", "22"}, {1, "11", "21"}, {1, "121", "1"}}));
}

TEST_CASE("images of paths agree with the endomorphism on the corpus") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto [g, j] = corpus::sample(seed);
    auto cg = CodingGraph::build(j);
    for (Vertex v : g->vertices()) {
      for (std::size_t len = 1; len <= 2; ++len) {
        for (const auto& alpha : paths_from(*g, v, len)) {
          CHECK(image_of_path(cg, alpha) == lambda_of_path(j, alpha));
        }
      }
    }
  }
}

TEST_CASE("projected images") {
  auto g = o2();
  auto j = order_two(g);
  auto cg = CodingGraph::build(j);
  for (const auto& mu : j.first_components()) {
    for (const char* delta : {"1", "2", "21", "122"}) {
      CHECK(project_image(cg, mu, P(g, delta)) ==
            AlgebraElement::projection(g, mu) * lambda_apply(j, s(g, delta)));
    }
  }
  CHECK_THROWS_AS(project_image(cg, P(g, "12"), P(g, "1")), DomainError);
  CHECK_THROWS_AS(project_image(cg, P(g, "2"), P(g, "@v")), DomainError);
}

TEST_CASE("resolving properties") {
  auto g = o2();
  auto report = check_resolving(CodingGraph::build(intro(g)));
  CHECK(report.right_resolving);
  CHECK(report.left_checked);
  CHECK(report.left_resolving);

  auto skipped = check_resolving(CodingGraph::build(order_two(g)));
  CHECK(skipped.right_resolving);
  CHECK_FALSE(skipped.left_checked);

  // Hand-built negative control: two edges out of one vertex with one label,
  // and two edges into one vertex from sources with the same letter.
  Edge one = g->edge("1");
  std::vector<CodingVertex> vs{{P(g, "1"), one, P(g, "@v")}, {P(g, "2"), one, P(g, "@v")}};
  EdgeLabel s1{LabelKind::Positive, P(g, "1")};
  CodingGraph bad(g, vs, {{0, 0, s1}, {0, 1, s1}, {1, 0, {LabelKind::Positive, P(g, "2")}}});
  auto r = check_resolving(bad);
  CHECK_FALSE(r.right_resolving);
  CHECK(r.right_witnesses.size() == 1);
  CHECK(r.left_checked);
  CHECK_FALSE(r.left_resolving);
  CHECK_THROWS_AS(CodingGraph(g, vs, {{0, 5, s1}}), InputError);
}

TEST_CASE("left-resolving holds whenever all edges are non-negative") {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    auto [g, j] = corpus::sample(seed);
    auto cg = CodingGraph::build(j);
    auto report = check_resolving(cg);
    CHECK(report.right_resolving);
    if (report.left_checked) {
      ++checked;
      CHECK(report.left_resolving);
    }
  }
  CHECK(checked > 10);
}

TEST_CASE("DOT output is deterministic") {
  auto g = o2();
  auto cg = CodingGraph::build(intro(g));
  auto dot = to_dot(cg);
  CHECK(dot == to_dot(CodingGraph::build(intro(g))));
  CHECK(dot.rfind("digraph coding {", 0) == 0);
  CHECK(dot.find("[label=\"L=P_v d=0\"]") != std::string::npos);
  CHECK(dot.find("[label=\"2 | 1 / 2\"]") != std::string::npos);
}
