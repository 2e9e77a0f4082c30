#include <random>
#include <set>

#include "corpus.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

using namespace testing_support;

namespace {

PairSetError::Kind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const PairSetError& e) {
    return e.kind();
  }
  FAIL("expected PairSetError");
  return PairSetError::Kind::NotPolynomial;
}

std::vector<std::pair<std::string, std::string>> listing(const PairSet& j) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& p : j.pairs()) out.emplace_back(format_path(j.g(), p.mu), format_path(j.g(), p.nu));
  return out;
}

}  // namespace

TEST_CASE("building presentations") {
  auto g = o2();
  auto intro = pairset(g, {{"1", "22"}, {"21", "21"}, {"22", "1"}});
  CHECK(intro.element() == elem(g, {{1, "1", "22"}, {1, "21", "21"}, {1, "22", "1"}}));
  CHECK(intro.size() == 3);
  auto ex = pairset(g, {{"122", "122"}, {"11", "121"}, {"121", "11"}, {"2", "2"}});
  CHECK(is_unitary(ex.element()));
  CHECK(kind_of([&] { pairset(g, {{"1", "1"}}); }) == PairSetError::Kind::FirstNotPartition);
}

TEST_CASE("each validation failure has its own kind") {
  auto f = graph_f();
  auto g = o2();
  CHECK(kind_of([&] { pairset(f, {{"3", "2"}}); }) == PairSetError::Kind::SourceMismatch);
  CHECK(kind_of([&] { pairset(f, {{"1", "2"}}); }) == PairSetError::Kind::RangeMismatch);
  CHECK(kind_of([&] { pairset(g, {{"@v", "@v"}}); }) == PairSetError::Kind::EmptySecond);
  CHECK(kind_of([&] { pairset(g, {{"1", "1"}, {"1", "2"}, {"2", "2"}}); }) == PairSetError::Kind::DuplicateFirst);
  CHECK(kind_of([&] { pairset(g, {{"1", "1"}, {"2", "1"}}); }) == PairSetError::Kind::SecondNotPartition);
  CHECK(to_string(PairSetError::Kind::EmptySecond) == "empty_second");
  try {
    pairset(g, {{"@v", "@v"}});
  } catch (const PairSetError& e) {
    CHECK(std::string(e.what()).find("P_v = sum S_e S_e^*") != std::string::npos);
  }
}

TEST_CASE("vertex second components can be expanded on request") {
  auto g = o2();
  BuildOptions opt;
  opt.expand_vertex_pairs = true;
  auto j = PairSet::build(g, {{P(g, "@v"), P(g, "@v")}}, opt);
  CHECK(listing(j) == std::vector<std::pair<std::string, std::string>>{{"1", "1"}, {"2", "2"}});
  CHECK(j.element() == AlgebraElement::one(g));
}

TEST_CASE("a vertex first component is accepted with a warning") {
  auto g = std::make_shared<const Graph>(Graph::from_lists({"v"}, {{"a", "v", "v"}}));
  auto j = PairSet::build(g, {{P(g, "@v"), P(g, "a")}});
  REQUIRE(j.warnings().size() == 1);
  CHECK(j.warnings()[0].find("length-0 first component") != std::string::npos);
}

TEST_CASE("reading a presentation off a unitary") {
  auto g = o2();
  auto u = elem(g, {{1, "11", "1"}, {1, "12", "21"}, {1, "2", "22"}});
  auto j = element_to_pairset(u * shift_phi(adjoint(u)));
  CHECK(listing(j) == std::vector<std::pair<std::string, std::string>>{
                          {"111", "111"}, {"1121", "112"}, {"1122", "12"}, {"12", "211"}, {"21", "212"}, {"22", "22"}});
  CHECK(listing(element_to_pairset(AlgebraElement::one(g))) ==
        std::vector<std::pair<std::string, std::string>>{{"1", "1"}, {"2", "2"}});
  CHECK(kind_of([&] { element_to_pairset(elem(g, {{1, "1", "2"}, {1, "2", "2"}})); }) ==
        PairSetError::Kind::NotUnitary);
}

TEST_CASE("a unitary outside the polynomial class is rejected") {
  // -1 is unitary but has no presentation with coefficients 1.
  auto g = o2();
  auto minus_one = Integer(-1) * AlgebraElement::one(g);
  REQUIRE(is_unitary(minus_one));
  CHECK(kind_of([&] { element_to_pairset(minus_one); }) == PairSetError::Kind::NotPolynomial);
}

TEST_CASE("the endomorphism on generators") {
  auto g = o2();
  auto j = pairset(g, {{"122", "122"}, {"11", "121"}, {"121", "11"}, {"2", "2"}});
  CHECK(lambda_apply(j, proj(g, "@v")) == proj(g, "@v"));
  // u S_1 multiplied out by hand: P_122 S_1 = S_122 S_22^*, S_11 S_121^* S_1 = S_11 S_21^*, S_121 S_11^* S_1 = S_121 S_1^*.
  CHECK(lambda_apply(j, s(g, "1")) == elem(g, {{1, "122", "22"}, {1, "11", "21"}, {1, "121", "1"}}));
  CHECK(lambda_apply(j, s(g, "1")) == j.element() * s(g, "1"));

  auto f = graph_f();
  auto jf = pairset(f, {{"11", "11"}, {"12", "12"}, {"2", "2"}, {"3", "3"}});
  for (Vertex v : f->vertices()) {
    auto pv = AlgebraElement::projection(f, Path::vertex(v));
    CHECK(lambda_apply(jf, pv) == pv);
  }
}

TEST_CASE("sub-partitions of a prefix") {
  auto g = o2();
  auto j = pairset(g, {{"111", "111"}, {"12", "211"}, {"1121", "112"}, {"21", "212"}, {"1122", "12"}, {"22", "22"}});
  CHECK(names(g, contains_partition_of_prefix(j, Side::First, P(g, "1"))) ==
        std::vector<std::string>{"111", "1121", "1122", "12"});
  auto intro = pairset(g, {{"1", "22"}, {"21", "21"}, {"22", "1"}});
  CHECK(names(g, contains_partition_of_prefix(intro, Side::Second, P(g, "2"))) ==
        std::vector<std::string>{"21", "22"});
  CHECK(names(g, contains_partition_of_prefix(intro, Side::Second, P(g, "@v"))) ==
        std::vector<std::string>{"1", "21", "22"});
  CHECK_THROWS_AS(contains_partition_of_prefix(intro, Side::First, P(g, "12")), DomainError);
  // Prefix longer than some member: only members extending it count.
  auto sub = contains_partition_of_prefix(j, Side::First, P(g, "112"));
  CHECK(names(g, sub) == std::vector<std::string>{"1121", "1122"});
  CHECK(oracle::is_partition_by_extension(*g, g->vertex("v"), {P(g, "1"), P(g, "2")}));
}

TEST_CASE("random presentations") {
  auto g = o2();
  RandomUnitaryOptions one_letter;
  one_letter.max_len = 1;
  std::set<std::vector<std::pair<std::string, std::string>>> seen;
  for (std::uint64_t seed = 0; seed < 30; ++seed) seen.insert(listing(random_unitary(g, seed, one_letter)));
  CHECK(seen == std::set<std::vector<std::pair<std::string, std::string>>>{
                    {{"1", "1"}, {"2", "2"}}, {{"1", "2"}, {"2", "1"}}});
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto s1 = corpus::sample(seed);
    auto s2 = corpus::sample(seed);
    CHECK(s1.j == s2.j);
    CHECK_NOTHROW(PairSet::build(s1.graph, s1.j.pairs()));
  }
}

TEST_CASE("the endomorphism is a unital *-homomorphism") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto [g, j] = corpus::sample(seed);
    std::mt19937_64 rng(seed);
    auto a = corpus::random_element(g, rng, 2, 2);
    auto b = corpus::random_element(g, rng, 2, 2);
    CHECK(lambda_apply(j, a * b) == lambda_apply(j, a) * lambda_apply(j, b));
    CHECK(lambda_apply(j, adjoint(a)) == adjoint(lambda_apply(j, a)));
    CHECK(lambda_apply(j, AlgebraElement::one(g)) == AlgebraElement::one(g));
  }
}

TEST_CASE("the endomorphism preserves the diagonal") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto [g, j] = corpus::sample(seed);
    std::mt19937_64 rng(seed + 7);
    auto p = corpus::random_diagonal_projection(g, rng, 2);
    auto image = lambda_apply(j, p);
    for (const auto& [m, c] : image.terms()) CHECK(m.is_diagonal());
    CHECK(image * image == image);
  }
}

TEST_CASE("generator images, powers and recovery of u") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto [g, j] = corpus::sample(seed);
    AlgebraElement recovered(g);
    for (Edge e : g->edges()) {
      auto se = AlgebraElement::path(g, Path::edge(*g, e));
      auto image = lambda_apply(j, se);
      CHECK(image == j.element() * se);
      recovered += image * adjoint(se);
    }
    CHECK(recovered == j.element());
    std::mt19937_64 rng(seed);
    auto mu = corpus::random_path(*g, rng, 3);
    if (!mu.is_vertex()) {
      CHECK(lambda_of_path(j, mu) ==
            u_power(j.element(), static_cast<int>(mu.length())) * AlgebraElement::path(g, mu));
    }
  }
}

TEST_CASE("presentations round-trip through the normal form") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto [g, j] = corpus::sample(seed);
    auto back = element_to_pairset(j.element());
    CHECK(back.element() == j.element());
  }
}
