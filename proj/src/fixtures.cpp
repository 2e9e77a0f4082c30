#include "graphalg/fixtures.hpp"

namespace graphalg {

namespace {

GraphPtr cuntz_two() {
  return std::make_shared<const Graph>(Graph::from_lists({"v"}, {{"1", "v", "v"}, {"2", "v", "v"}}));
}

// A loop 1 at v and a two-cycle 2, 3 through w.
GraphPtr loop_and_cycle() {
  return std::make_shared<const Graph>(
      Graph::from_lists({"v", "w"}, {{"1", "v", "v"}, {"2", "v", "w"}, {"3", "w", "v"}}));
}

PairSet pairs(const GraphPtr& g, std::initializer_list<std::pair<const char*, const char*>> texts) {
  std::vector<Pair> out;
  for (const auto& [mu, nu] : texts) out.push_back({parse_path(*g, mu), parse_path(*g, nu)});
  return PairSet::build(g, std::move(out));
}

Fixture base(std::string name, std::string summary, GraphPtr graph, PairSet j) {
  Fixture f{std::move(name), std::move(summary), std::move(graph), std::move(j), 0, 0, 0, Outcome::Auto, {}, 0, {}, {}, {}};
  return f;
}

std::vector<Fixture> make_fixtures() {
  auto o2 = cuntz_two();
  auto f = loop_and_cycle();
  std::vector<Fixture> out;

  auto intro = base("intro", "three-pair flip on two loops", o2, pairs(o2, {{"1", "22"}, {"21", "21"}, {"22", "1"}}));
  intro.coding_vertices = 3;
  intro.coding_edges = 6;
  intro.outcome = Outcome::NotAutoNotSynchronizing;
  intro.witness = "1";
  out.push_back(std::move(intro));

  auto ex1 = base("ex1", "u Phi(u^*) for a three-pair flip", o2,
                  pairs(o2, {{"111", "111"}, {"1121", "112"}, {"1122", "12"}, {"12", "211"}, {"21", "212"}, {"22", "22"}}));
  ex1.coding_vertices = 6;
  ex1.coding_edges = 12;
  ex1.delay = 2;
  // Frozen from the window recipe, cross-checked against the composite machine.
  ex1.psi = {{"", "1", "(1)^inf"}, {"", "12", "1(12)^inf"}, {"", "121", "(112)^inf"}, {"2", "1", "12(1)^inf"}};
  out.push_back(std::move(ex1));

  auto ex2 = base("ex2", "order-two automorphism needing one split", o2,
                  pairs(o2, {{"11", "121"}, {"121", "11"}, {"122", "122"}, {"2", "2"}}));
  ex2.coding_vertices = 4;
  ex2.coding_edges = 9;
  ex2.negative_edges = 2;
  ex2.delay = 2;
  ex2.splits = 1;
  ex2.psi = {{"", "112", "(121)^inf"}, {"", "121", "(112)^inf"}, {"", "1", "(12)^inf"}, {"2", "1", "(21)^inf"}};
  out.push_back(std::move(ex2));

  auto ex3 = base("ex3", "diagonal automorphism with only even-degree generator images", f,
                  pairs(f, {{"1", "23"}, {"23", "1"}, {"31", "323"}, {"323", "31"}}));
  ex3.coding_vertices = 4;
  ex3.coding_edges = 6;
  ex3.delay = 1;
  ex3.obstruction = true;
  ex3.psi = {{"", "1", "(23)^inf"}, {"", "23", "1(23)^inf"}, {"", "123", "23(1)^inf"}};
  out.push_back(std::move(ex3));

  auto nonpos = base("nonpos", "zero loop at (1, 21)", o2, pairs(o2, {{"1", "21"}, {"21", "22"}, {"22", "1"}}));
  nonpos.coding_vertices = 3;
  nonpos.coding_edges = 6;
  nonpos.outcome = Outcome::NotAutoNonPositiveCycle;
  nonpos.witness = "11";
  out.push_back(std::move(nonpos));
  return out;
}

template <typename T>
std::string show(const T& v) {
  if constexpr (std::is_same_v<T, std::string>) {
    return v;
  } else {
    return std::to_string(v);
  }
}

class Checker {
 public:
  explicit Checker(FixtureReport& r) : report_(r) {}

  template <typename T>
  void equal(const std::string& name, const T& got, const T& want) {
    add(name, got == want, "got " + show(got) + ", expected " + show(want));
  }

  void add(const std::string& name, bool ok, std::string detail) {
    report_.checks.push_back({name, ok, ok ? "" : std::move(detail)});
    report_.passed = report_.passed && ok;
  }

 private:
  FixtureReport& report_;
};

}  // namespace

const std::vector<Fixture>& bundled_fixtures() {
  static const std::vector<Fixture> all = make_fixtures();
  return all;
}

const Fixture& find_fixture(std::string_view name) {
  for (const auto& f : bundled_fixtures()) {
    if (f.name == name) return f;
  }
  throw InputError("unknown fixture " + std::string(name));
}

FixtureReport run_fixture(const Fixture& f) {
  FixtureReport report{f.name, true, {}, Json::object()};
  Checker check(report);
  const Graph& g = *f.graph;
  auto cg = CodingGraph::build(f.j);
  check.equal("coding_vertices", cg.vertex_count(), f.coding_vertices);
  check.equal("coding_edges", cg.edge_count(), f.coding_edges);
  check.equal("negative_edges", classify(cg).negative_edges, f.negative_edges);

  auto verdict = diagonal_verdict(f.j);
  check.equal("outcome", to_string(verdict.outcome), to_string(f.outcome));
  check.equal("splits", verdict.split.trace.size(), f.splits);
  report.observed["outcome"] = to_string(verdict.outcome);
  if (verdict.delay) report.observed["delay"] = *verdict.delay;
  if (f.delay) check.add("delay", verdict.delay == f.delay, "got " + (verdict.delay ? show(*verdict.delay) : "none"));
  if (f.witness && verdict.outcome != Outcome::Auto) {
    auto mu = not_in_image_witness(verdict);
    check.equal("witness", format_path(g, mu), *f.witness);
    check.equal("witness_oracle", to_string(diagonal_onto_oracle(f.j, mu, 6)),
                to_string(OntoResult::NotInImageUpToDepth));
  }
  if (f.obstruction) check.equal("even_degree_obstruction", even_degree_obstruction(f.j).fires, *f.obstruction);
  if (!f.psi.empty() && verdict.outcome == Outcome::Auto) {
    auto machine = build_psi_machine(f.j);
    Json images = Json::object();
    for (const auto& s : f.psi) {
      auto w = EventuallyPeriodicWord::make(parse_word(g, s.prefix), parse_word(g, s.period));
      auto image = format_word(g, psi_eval(machine, w));
      images[format_word(g, w)] = image;
      check.equal("psi " + format_word(g, w), image, s.image);
    }
    report.observed["psi"] = images;
  }
  return report;
}

Json to_json(const FixtureReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json item{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    checks.push_back(std::move(item));
  }
  return {{"fixture", r.fixture}, {"passed", r.passed}, {"observed", r.observed}, {"checks", checks}};
}

}  // namespace graphalg
