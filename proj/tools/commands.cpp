#include "commands.hpp"

#include <CLI11.hpp>
#include <functional>
#include <optional>

#include "graphalg/fixtures.hpp"
#include "graphalg/io.hpp"

namespace graphalg::cli {

namespace {

/// A computed "no": printed on stdout, exit code 1.
struct NegativeResult {
  Json detail;
};

struct Settings {
  std::uint64_t seed = 0;
  std::size_t fuel = 0;
  std::size_t depth = 6;
  std::string tie_break = "lex";

  SplitOptions split() const {
    return {fuel, tie_break == "random" ? TieBreak::Random : TieBreak::Lexicographic, seed};
  }
};

Json ids(const Graph& g, const std::vector<Vertex>& vs) {
  Json out = Json::array();
  for (Vertex v : vs) out.push_back(g.vertex_id(v));
  return out;
}

Json validation_json(const Graph& g, const ValidationReport& r) {
  Json out{{"accepted", r.accepted()},
           {"sinks", ids(g, r.sinks)},
           {"sources", ids(g, r.sources)},
           {"cycle_without_exit", r.cycle_without_exit}};
  if (r.exitless_cycle) out["exitless_cycle"] = format_path(g, *r.exitless_cycle);
  return out;
}

GraphPtr load_graph(const std::string& path) {
  auto g = graph_from_json(read_json_file(path));
  auto report = validate_standing_assumptions(*g);
  if (!report.accepted()) {
    throw InputError("graph has a sink, a source or a cycle without exit; run validate for details");
  }
  return g;
}

PairSet load_unitary(const GraphPtr& g, const std::string& path) {
  try {
    return pairset_from_json(g, read_json_file(path));
  } catch (const PairSetError& e) {
    throw NegativeResult{{{"unitary", false}, {"reason", to_string(e.kind())}, {"message", e.what()}}};
  }
}

void emit(std::ostream& out, const std::string& file, const std::string& text) {
  if (file == "-") {
    out << text;
  } else {
    write_text_file(file, text);
  }
}

Json error_json(const char* kind, const std::string& message) { return {{"error", kind}, {"message", message}}; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynomial endomorphisms of Leavitt path algebras and their diagonal actions", "graphalg"};
  app.require_subcommand(1);
  // Global flags are accepted after nested subcommands too.
  app.fallthrough();
  Settings settings;
  app.add_option("--seed", settings.seed, "seed for random tie-breaking");
  app.add_option("--fuel", settings.fuel, "round cap for splitting (default: GRAPHALG_FUEL or 10000)");
  app.add_option("--depth", settings.depth, "depth of the brute-force image oracle")->check(CLI::PositiveNumber);
  app.add_option("--tie-break", settings.tie_break, "split choice among lowest final edges")
      ->check(CLI::IsMember({"lex", "random"}));

  std::function<Json()> action;
  std::string graph_file;
  std::string unitary_file;
  auto with_inputs = [&](CLI::App* sub) {
    sub->add_option("graph", graph_file, "graph JSON")->required();
    sub->add_option("unitary", unitary_file, "unitary JSON (pairs or element)")->required();
  };

  auto* validate = app.add_subcommand("validate", "check the standing assumptions on a graph");
  validate->add_option("graph", graph_file, "graph JSON")->required();
  validate->callback([&] {
    action = [&] {
      auto g = graph_from_json(read_json_file(graph_file));
      auto report = validation_json(*g, validate_standing_assumptions(*g));
      if (!report["accepted"].get<bool>()) throw NegativeResult{report};
      return report;
    };
  });

  auto* unitary = app.add_subcommand("unitary", "polynomial unitaries");
  unitary->require_subcommand(1);
  auto* unitary_check = unitary->add_subcommand("check", "validate a unitary presentation");
  with_inputs(unitary_check);
  unitary_check->callback([&] {
    action = [&] {
      auto g = load_graph(graph_file);
      auto j = load_unitary(g, unitary_file);
      return Json{{"unitary", true},
                  {"pairs", to_json(j)["pairs"]},
                  {"element", to_string(j.element())},
                  {"warnings", j.warnings()}};
    };
  });

  std::string dot_file;
  auto* coding = app.add_subcommand("coding", "coding graphs");
  coding->require_subcommand(1);
  auto* coding_build = coding->add_subcommand("build", "build the coding graph of a unitary");
  with_inputs(coding_build);
  coding_build->add_option("--dot", dot_file, "write DOT to FILE ('-' for stdout)");
  coding_build->callback([&] {
    action = [&] {
      auto cg = CodingGraph::build(load_unitary(load_graph(graph_file), unitary_file));
      if (!dot_file.empty()) emit(out, dot_file, to_dot(cg));
      return coding_summary(cg);
    };
  });

  std::string trace_file;
  auto* split = app.add_subcommand("split", "splitting");
  split->require_subcommand(1);
  auto* split_run = split->add_subcommand("run", "split until the coding graph is decided");
  with_inputs(split_run);
  split_run->add_option("--trace", trace_file, "write JSON lines per round to FILE ('-' for stdout)");
  split_run->callback([&] {
    action = [&] {
      auto result = run_splitting_algorithm(load_unitary(load_graph(graph_file), unitary_file), settings.split());
      if (!trace_file.empty()) emit(out, trace_file, trace_jsonl(result));
      return Json{{"rounds", result.trace.size()},
                  {"classification", to_string(result.classification.kind)},
                  {"pairs", to_json(result.j)["pairs"]}};
    };
  });

  auto* verdict = app.add_subcommand("verdict", "decide whether the diagonal restriction is an automorphism");
  with_inputs(verdict);
  verdict->callback([&] {
    action = [&] {
      auto j = load_unitary(load_graph(graph_file), unitary_file);
      auto v = diagonal_verdict(j, settings.split());
      auto report = to_json(v);
      if (v.outcome == Outcome::Auto) return report;
      report["oracle"] = {{"depth", settings.depth},
                          {"result", to_string(diagonal_onto_oracle(j, not_in_image_witness(v), settings.depth))}};
      throw NegativeResult{report};
    };
  });

  std::string path_text;
  auto* endo = app.add_subcommand("endo", "the endomorphism on elements");
  endo->require_subcommand(1);
  auto* endo_image = endo->add_subcommand("image", "image of S_path");
  with_inputs(endo_image);
  endo_image->add_option("--path", path_text, "path text, e.g. 121 or @v")->required();
  endo_image->callback([&] {
    action = [&] {
      auto j = load_unitary(load_graph(graph_file), unitary_file);
      auto p = parse_path(j.g(), path_text);
      auto image = lambda_of_path(j, p);
      return Json{{"path", to_json(j.g(), p)}, {"image", to_json(image)}, {"text", to_string(image)}};
    };
  });

  std::string prefix_text;
  std::string period_text;
  auto* psi = app.add_subcommand("psi", "the induced map on infinite paths");
  psi->require_subcommand(1);
  auto* psi_cmd = psi->add_subcommand("eval", "psi of prefix.(period)^inf");
  with_inputs(psi_cmd);
  psi_cmd->add_option("--prefix", prefix_text, "edge word");
  psi_cmd->add_option("--period", period_text, "non-empty edge word")->required();
  psi_cmd->callback([&] {
    action = [&] {
      auto j = load_unitary(load_graph(graph_file), unitary_file);
      const Graph& g = j.g();
      auto v = diagonal_verdict(j, settings.split());
      if (v.outcome != Outcome::Auto) throw NegativeResult{to_json(v)};
      auto w = EventuallyPeriodicWord::make(parse_word(g, prefix_text), parse_word(g, period_text));
      auto image = psi_eval(build_psi_machine(j, settings.split()), w);
      return Json{{"input", to_json(g, w)}, {"image", to_json(g, image)}, {"text", format_word(g, image)}};
    };
  });

  std::string machine_name = "composite";
  auto* transducer = app.add_subcommand("transducer", "transducers for psi");
  transducer->require_subcommand(1);
  auto* transducer_build = transducer->add_subcommand("build", "build the sliding block, output and composite machines");
  with_inputs(transducer_build);
  transducer_build->add_option("--dot", dot_file, "write DOT of the chosen machine to FILE ('-' for stdout)");
  transducer_build->add_option("--machine", machine_name, "machine for --dot")
      ->check(CLI::IsMember({"slide", "output", "composite"}));
  transducer_build->callback([&] {
    action = [&] {
      auto j = load_unitary(load_graph(graph_file), unitary_file);
      auto v = diagonal_verdict(j, settings.split());
      if (v.outcome != Outcome::Auto) throw NegativeResult{to_json(v)};
      auto m = build_psi_machine(j, settings.split());
      const Transducer& chosen = machine_name == "slide" ? m.slide : machine_name == "output" ? m.output : m.composite;
      if (!dot_file.empty()) emit(out, dot_file, to_dot(chosen));
      return Json{{"delay", m.phi.m},
                  {"states",
                   {{"slide", m.slide.state_count()},
                    {"output", m.output.state_count()},
                    {"composite", m.composite.state_count()}}}};
    };
  });

  std::string example_name;
  auto* examples = app.add_subcommand("examples", "bundled fixtures");
  examples->require_subcommand(1);
  auto* examples_run = examples->add_subcommand("run", "recompute fixture expectations");
  examples_run->add_option("name", example_name, "fixture name or 'all'")->required();
  examples_run->callback([&] {
    action = [&] {
      std::vector<const Fixture*> chosen;
      if (example_name == "all") {
        for (const auto& f : bundled_fixtures()) chosen.push_back(&f);
      } else {
        chosen.push_back(&find_fixture(example_name));
      }
      Json reports = Json::array();
      bool passed = true;
      for (const Fixture* f : chosen) {
        auto r = run_fixture(*f);
        passed = passed && r.passed;
        reports.push_back(to_json(r));
      }
      Json report{{"passed", passed}, {"fixtures", reports}};
      if (!passed) throw InternalError("fixture expectations failed:\n" + dump(report));
      return report;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    out << dump(action());
    return kOk;
  } catch (const NegativeResult& r) {
    out << dump(r.detail);
    return kNegative;
  } catch (const InputError& e) {
    err << dump(error_json("input", e.what()));
    return kInputError;
  } catch (const DomainError& e) {
    err << dump(error_json("domain", e.what()));
    return kInputError;
  } catch (const FuelExhausted& e) {
    err << dump(error_json("fuel", e.what()));
    return kInternalError;
  } catch (const std::exception& e) {
    err << dump(error_json("internal", e.what()));
    return kInternalError;
  }
}

}  // namespace graphalg::cli
