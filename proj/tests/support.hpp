#pragma once

#include <initializer_list>
#include <string>
#include <tuple>
#include <vector>

#include "graphalg/algebra.hpp"
#include "graphalg/graph.hpp"
#include "graphalg/pairset.hpp"

namespace testing_support {

using namespace graphalg;

// One vertex "v" with loops 1 and 2.
inline GraphPtr o2() {
  return std::make_shared<const Graph>(Graph::from_lists({"v"}, {{"1", "v", "v"}, {"2", "v", "v"}}));
}

// v, w; 1 loop at v, 2: v -> w, 3: w -> v.
inline GraphPtr graph_f() {
  return std::make_shared<const Graph>(
      Graph::from_lists({"v", "w"}, {{"1", "v", "v"}, {"2", "v", "w"}, {"3", "w", "v"}}));
}

inline Path P(const GraphPtr& g, const std::string& text) { return parse_path(*g, text); }

inline std::vector<Path> paths(const GraphPtr& g, std::initializer_list<const char*> texts) {
  std::vector<Path> out;
  for (const char* t : texts) out.push_back(P(g, t));
  return out;
}

struct T {
  long coeff;
  const char* mu;
  const char* nu;
};

inline AlgebraElement elem(const GraphPtr& g, std::initializer_list<T> terms) {
  std::vector<Term> raw;
  for (const auto& t : terms) raw.push_back({t.coeff, {P(g, t.mu), P(g, t.nu)}});
  return AlgebraElement::normal_form(g, std::move(raw));
}

inline AlgebraElement proj(const GraphPtr& g, const char* mu) { return AlgebraElement::projection(g, P(g, mu)); }
inline AlgebraElement s(const GraphPtr& g, const char* mu) { return AlgebraElement::path(g, P(g, mu)); }
inline AlgebraElement s_star(const GraphPtr& g, const char* mu) { return AlgebraElement::path_adjoint(g, P(g, mu)); }

inline PairSet pairset(const GraphPtr& g, std::initializer_list<std::pair<const char*, const char*>> pairs) {
  std::vector<Pair> out;
  for (const auto& [mu, nu] : pairs) out.push_back({P(g, mu), P(g, nu)});
  return PairSet::build(g, std::move(out));
}

inline std::vector<std::string> names(const GraphPtr& g, const std::vector<Path>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(format_path(*g, p));
  return out;
}

}  // namespace testing_support
