#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <map>
#include <vector>

#include "graphalg/graph.hpp"

namespace graphalg {

using Integer = boost::multiprecision::cpp_int;

/// S_mu S_nu^*. Nonzero exactly when r(mu) == r(nu).
struct Monomial {
  Path mu;
  Path nu;

  /// |mu| - |nu|.
  long degree() const { return static_cast<long>(mu.length()) - static_cast<long>(nu.length()); }
  bool is_diagonal() const { return mu == nu; }

  bool operator==(const Monomial&) const = default;
  std::strong_ordering operator<=>(const Monomial& o) const {
    if (auto c = mu <=> o.mu; c != 0) return c;
    return nu <=> o.nu;
  }
};

struct Term {
  Integer coeff;
  Monomial monomial;
};

/// An element of the integral Leavitt path algebra, kept in normal form.
///
/// The basis used is the standard one: monomials S_mu S_nu^* with r(mu) = r(nu)
/// such that mu and nu do not both end in the special edge (the least edge)
/// of the same vertex. Any such monomial is rewritten with the summation
/// relation P_v = sum_{s(e)=v} S_e S_e^*:
///
///   S_{mu'g} S_{nu'g}^*  ->  S_{mu'} S_{nu'}^* - sum_{e != g} S_{mu'e} S_{nu'e}^*
///
/// The first replacement is strictly shorter and the others end in a
/// non-special edge pair, so the rewrite terminates; the representation of a
/// given element is unique, and equality is structural.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(GraphPtr graph) : graph_(std::move(graph)) {}

  /// Normalizes an arbitrary formal sum. Throws DomainError if some monomial
  /// has r(mu) != r(nu).
  static AlgebraElement normal_form(GraphPtr graph, std::vector<Term> raw);

  static AlgebraElement zero(GraphPtr graph) { return AlgebraElement(std::move(graph)); }
  static AlgebraElement one(GraphPtr graph);
  static AlgebraElement monomial(GraphPtr graph, Path mu, Path nu, Integer coeff = 1);
  /// S_mu (for a vertex path this is P_v).
  static AlgebraElement path(GraphPtr graph, const Path& mu);
  /// S_mu^*.
  static AlgebraElement path_adjoint(GraphPtr graph, const Path& mu);
  /// P_mu = S_mu S_mu^*.
  static AlgebraElement projection(GraphPtr graph, const Path& mu);

  const GraphPtr& graph() const { return graph_; }
  const Graph& g() const { return *graph_; }
  const std::map<Monomial, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);

 private:
  GraphPtr graph_;
  std::map<Monomial, Integer> terms_;
};

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator*(const Integer& c, const AlgebraElement& a);

/// Product via S_nu^* S_alpha = S_gamma (alpha = nu gamma), S_gamma^*
/// (nu = alpha gamma) or 0. Throws DomainError for elements over different
/// graphs.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

AlgebraElement adjoint(const AlgebraElement& a);

/// Phi(x) = sum_e S_e x S_e^*.
AlgebraElement shift_phi(const AlgebraElement& a);

/// u_k = u Phi(u) ... Phi^{k-1}(u). Throws DomainError for k < 1.
AlgebraElement u_power(const AlgebraElement& u, int k);

bool is_unitary(const AlgebraElement& u);

/// Splits terms by degree |mu| - |nu|.
std::map<long, AlgebraElement> graded_components(const AlgebraElement& a);

/// For a diagonal projection a = sum P_beta, the canonical prefix-free family
/// {beta}: fewest members, sorted. Throws DomainError otherwise.
std::vector<Path> diagonal_support(const AlgebraElement& a);

/// The depth-L refinement of a diagonal element as coefficients of P_beta,
/// |beta| = L, over every vertex. Throws DomainError if a is not diagonal.
std::map<Path, Integer> diagonal_coefficients(const AlgebraElement& a, std::size_t depth);

/// Maximum of |mu| and |nu| over the terms.
std::size_t max_path_length(const AlgebraElement& a);

std::string to_string(const AlgebraElement& a);

}  // namespace graphalg
