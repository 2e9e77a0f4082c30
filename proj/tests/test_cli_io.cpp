#include <sstream>

#include "commands.hpp"
#include "corpus.hpp"
#include "doctest.h"
#include "graphalg/fixtures.hpp"
#include "support.hpp"

using namespace testing_support;

namespace {

const std::string kDir = GRAPHALG_FIXTURE_DIR;

struct Outcome3 {
  int code;
  std::string out;
  std::string err;
};

Outcome3 run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = graphalg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string file(const std::string& name) { return kDir + "/" + name; }

}  // namespace

TEST_CASE("graph, path, element and unitary JSON round-trip") {
  auto g = o2();
  auto gj = to_json(*g);
  CHECK(*graph_from_json(gj) == *g);
  CHECK(dump(gj) == dump(to_json(*graph_from_json(parse_json(dump(gj))))));

  for (const char* text : {"@v", "1", "1221"}) {
    auto p = P(g, text);
    CHECK(path_from_json(*g, to_json(*g, p)) == p);
  }
  CHECK(path_from_json(*g, parse_json(R"({"edges": ["2", "1"]})")) == P(g, "21"));
  CHECK_THROWS_AS(path_from_json(*g, parse_json(R"({"edges": []})")), InputError);
  CHECK_THROWS_AS(path_from_json(*g, parse_json(R"({"anchor": "x", "edges": []})")), InputError);

  auto big = AlgebraElement::monomial(g, P(g, "1"), P(g, "2"), Integer("123456789012345678901234567890"));
  auto a = elem(g, {{3, "12", "1"}, {-2, "@v", "@v"}}) + big;
  auto aj = to_json(a);
  CHECK(aj["terms"].size() == a.size());
  CHECK(element_from_json(g, aj) == a);
  CHECK(element_from_json(g, parse_json(dump(aj))) == a);

  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto [h, j] = corpus::sample(seed);
    CHECK(*graph_from_json(to_json(*h)) == *h);
    auto hp = graph_from_json(to_json(*h));
    CHECK(to_json(pairset_from_json(hp, to_json(j))) == to_json(j));
    CHECK(to_json(element_from_json(h, to_json(j.element()))) == to_json(j.element()));
  }
  auto ex2 = pairset(g, {{"122", "122"}, {"11", "121"}, {"121", "11"}, {"2", "2"}});
  CHECK(pairset_from_json(g, to_json(ex2.element())) == ex2);
}

TEST_CASE("malformed documents are input errors") {
  auto g = o2();
  CHECK_THROWS_AS(parse_json("{"), InputError);
  CHECK_THROWS_AS(graph_from_json(parse_json(R"({"vertices": "v"})")), InputError);
  CHECK_THROWS_AS(graph_from_json(parse_json(R"({"vertices": ["v"], "edges": [{"id": "1", "src": "v"}]})")),
                  InputError);
  CHECK_THROWS_AS(graph_from_json(parse_json(R"({"vertices": ["v"], "edges": [{"id": "1", "src": "v", "dst": "w"}]})")),
                  GraphError);
  CHECK_THROWS_AS(element_from_json(g, parse_json(R"({"terms": [{"coeff": 1.5, "mu": {"edges": ["1"]},
                                                         "nu": {"edges": ["1"]}}]})")),
                  InputError);
  CHECK_THROWS_AS(pairset_from_json(g, parse_json(R"({"pairs": [{"mu": {"edges": ["1"]}, "nu": {"edges": ["1"]}}]})")),
                  PairSetError);
  CHECK_THROWS_AS(read_json_file(file("missing.json")), InputError);
  CHECK_THROWS_AS(word_from_json(*g, parse_json(R"({"prefix": [], "period": []})")), InputError);
}

TEST_CASE("words, traces and verdicts serialize") {
  auto g = o2();
  auto w = EventuallyPeriodicWord::make(parse_word(*g, "1"), parse_word(*g, "12"));
  auto wj = to_json(*g, w);
  CHECK(wj.dump() == R"({"prefix":["1"],"period":["1","2"]})");
  CHECK(word_from_json(*g, wj) == w);

  auto ex2 = pairset(g, {{"122", "122"}, {"11", "121"}, {"121", "11"}, {"2", "2"}});
  auto split = run_splitting_algorithm(ex2);
  CHECK(trace_jsonl(split) ==
        R"({"round":1,"split":{"mu":{"anchor":"v","edges":["2"]},"nu":{"anchor":"v","edges":["2"]}},)"
        R"("negative_edges":2,"classification":"has_negative_edges"})"
        "\n");

  auto v = to_json(diagonal_verdict(ex2));
  CHECK(v["outcome"] == "auto");
  CHECK(v["delay"] == 2);
  CHECK(v["splits"].size() == 1);
  CHECK_FALSE(v.contains("witness"));

  auto nonpos = to_json(diagonal_verdict(pairset(g, {{"1", "21"}, {"21", "22"}, {"22", "1"}})));
  CHECK(nonpos["outcome"] == "not_auto_nonpositive_cycle");
  CHECK_FALSE(nonpos.contains("delay"));
  CHECK(nonpos["witness"]["mu"] == parse_json(R"({"anchor": "v", "edges": ["1", "1"]})"));
  CHECK(nonpos["witness"]["cycles"].dump() == R"x([["(1, 21)","(1, 21)"]])x");

  auto summary = coding_summary(CodingGraph::build(pairset(g, {{"1", "22"}, {"21", "21"}, {"22", "1"}})));
  CHECK(summary["vertices"].size() == 3);
  CHECK(summary["edges"].size() == 6);
  CHECK(summary["classification"] == "all_non_negative");
  CHECK(parse_json(dump(summary)) == summary);
}

TEST_CASE("bundled fixtures") {
  CHECK(bundled_fixtures().size() == 5);
  for (const auto& f : bundled_fixtures()) {
    CAPTURE(f.name);
    auto r = run_fixture(f);
    for (const auto& c : r.checks) {
      CAPTURE(c.name);
      CHECK_MESSAGE(c.passed, c.detail);
    }
    CHECK(r.passed);
    // The files shipped next to the sources are the fixture data.
    CHECK(dump(to_json(*f.graph)) == dump(read_json_file(file(f.name + ".graph.json"))));
    CHECK(dump(to_json(f.j)) == dump(read_json_file(file(f.name + ".unitary.json"))));
  }
  CHECK(run_fixture(find_fixture("ex2")).observed["psi"]["(112)^inf"] == "(121)^inf");
  CHECK_THROWS_AS(find_fixture("ex4"), InputError);
}

TEST_CASE("DOT output is byte-stable") {
  auto g = o2();
  auto intro = pairset(g, {{"1", "22"}, {"21", "21"}, {"22", "1"}});
  auto dot = to_dot(CodingGraph::build(intro));
  CHECK(dot == to_dot(CodingGraph::build(pairset(g, {{"22", "1"}, {"1", "22"}, {"21", "21"}}))));
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::istringstream lines(dot);
  for (std::string line; std::getline(lines, line);) {
    if (line.find(" -> ") != std::string::npos) {
      ++edges;
    } else if (line.find("[label=") != std::string::npos) {
      ++nodes;
    }
  }
  CHECK(nodes == 3);
  CHECK(edges == 6);

  auto ex2 = to_dot(CodingGraph::build(pairset(g, {{"122", "122"}, {"11", "121"}, {"121", "11"}, {"2", "2"}})));
  CHECK(ex2.find("S_1^* d=-1") != std::string::npos);
  CHECK(ex2.find("S_2^* d=-1") != std::string::npos);
}

TEST_CASE("command line") {
  auto ex2 = run_cli({"examples", "run", "ex2"});
  CHECK(ex2.code == 0);
  auto report = parse_json(ex2.out);
  CHECK(report["passed"] == true);
  CHECK(report["fixtures"][0]["observed"]["outcome"] == "auto");
  CHECK(report["fixtures"][0]["observed"]["delay"] == 2);
  CHECK(report["fixtures"][0]["observed"]["psi"]["(112)^inf"] == "(121)^inf");

  auto all = run_cli({"examples", "run", "all"});
  CHECK(all.code == 0);
  CHECK(parse_json(all.out)["fixtures"].size() == 5);

  auto nonpos = run_cli({"verdict", file("nonpos.graph.json"), file("nonpos.unitary.json")});
  CHECK(nonpos.code == 1);
  CHECK(parse_json(nonpos.out)["outcome"] == "not_auto_nonpositive_cycle");
  CHECK(parse_json(nonpos.out)["oracle"]["result"] == "not_in_image_up_to_depth");

  auto loop = run_cli({"validate", file("loop.graph.json")});
  CHECK(loop.code == 1);
  CHECK(parse_json(loop.out)["cycle_without_exit"] == true);

  CHECK(run_cli({"verdict", file("loop.graph.json"), file("nonpos.unitary.json")}).code == 2);
  CHECK(run_cli({"unitary", "check", file("ex1.graph.json"), file("not_unitary.unitary.json")}).code == 1);
  auto missing = run_cli({"unitary", "check", file("ex1.graph.json"), file("missing.json")});
  CHECK(missing.code == 2);
  CHECK(parse_json(missing.err)["error"] == "input");
  CHECK(run_cli({"split", "run", file("two_rounds.graph.json"), file("two_rounds.unitary.json"), "--fuel", "1"}).code == 3);
  CHECK(run_cli({"nonsense"}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);

  auto psi = run_cli({"psi", "eval", file("ex2.graph.json"), file("ex2.unitary.json"), "--period", "121"});
  CHECK(psi.code == 0);
  CHECK(parse_json(psi.out)["image"] == parse_json(R"({"prefix": [], "period": ["1", "1", "2"]})"));

  auto image = run_cli({"endo", "image", file("ex2.graph.json"), file("ex2.unitary.json"), "--path", "2"});
  CHECK(image.code == 0);
  CHECK(parse_json(image.out)["text"] == to_string(lambda_of_path(find_fixture("ex2").j, P(o2(), "2"))));
}

TEST_CASE("command output is byte-stable") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"coding", "build", file("ex2.graph.json"), file("ex2.unitary.json"), "--dot", "-"},
           {"transducer", "build", file("ex2.graph.json"), file("ex2.unitary.json"), "--dot", "-"},
           {"split", "run", file("ex2.graph.json"), file("ex2.unitary.json"), "--trace", "-"},
           {"verdict", file("intro.graph.json"), file("intro.unitary.json")},
           {"unitary", "check", file("ex3.graph.json"), file("ex3.unitary.json")}}) {
    auto first = run_cli(args);
    auto second = run_cli(args);
    CHECK(first.code == second.code);
    CHECK(first.out == second.out);
    CHECK_FALSE(first.out.empty());
  }
}
