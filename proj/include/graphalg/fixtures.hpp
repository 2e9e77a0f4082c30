#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphalg/io.hpp"

namespace graphalg {

struct PsiSample {
  std::string prefix;
  std::string period;
  /// format_word of the image.
  std::string image;
};

/// A bundled unitary with its frozen expectations.
struct Fixture {
  std::string name;
  std::string summary;
  GraphPtr graph;
  PairSet j;
  std::size_t coding_vertices = 0;
  std::size_t coding_edges = 0;
  std::size_t negative_edges = 0;
  Outcome outcome = Outcome::Auto;
  std::optional<std::size_t> delay;
  std::size_t splits = 0;
  /// Path text of not_in_image_witness for NotAuto verdicts.
  std::optional<std::string> witness;
  std::optional<bool> obstruction;
  std::vector<PsiSample> psi;
};

/// intro, ex1, ex2, ex3, nonpos.
const std::vector<Fixture>& bundled_fixtures();
/// Throws InputError for unknown names.
const Fixture& find_fixture(std::string_view name);

struct FixtureCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct FixtureReport {
  std::string fixture;
  bool passed = true;
  std::vector<FixtureCheck> checks;
  /// Computed outcome, delay and psi images.
  Json observed;
};

/// Recomputes every expectation of f from its graph and pairs.
FixtureReport run_fixture(const Fixture& f);
Json to_json(const FixtureReport& r);

}  // namespace graphalg
