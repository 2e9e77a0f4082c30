#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphalg/algebra.hpp"

namespace graphalg {

/// (mu, nu) contributing S_mu S_nu^* to u_J.
struct Pair {
  Path mu;
  Path nu;

  bool operator==(const Pair&) const = default;
  std::strong_ordering operator<=>(const Pair& o) const {
    if (auto c = mu <=> o.mu; c != 0) return c;
    return nu <=> o.nu;
  }
};

class PairSetError : public InputError {
 public:
  enum class Kind {
    SourceMismatch,
    RangeMismatch,
    FirstNotPartition,
    SecondNotPartition,
    DuplicateFirst,
    EmptySecond,
    NotUnitary,
    NotPolynomial,
  };

  PairSetError(Kind kind, const std::string& what) : InputError(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

std::string to_string(PairSetError::Kind kind);

struct BuildOptions {
  /// Rewrite pairs (mu, v) with a vertex second component into
  /// {(mu e, e) : s(e) = v} instead of rejecting them.
  bool expand_vertex_pairs = false;
};

/// A validated presentation J of a polynomial unitary
/// u_J = sum_{(mu,nu) in J} S_mu S_nu^*. Pairs are stored sorted, so the
/// pair index doubles as the coding-graph vertex index.
class PairSet {
 public:
  static PairSet build(GraphPtr graph, std::vector<Pair> pairs, BuildOptions options = {});

  const GraphPtr& graph() const { return graph_; }
  const Graph& g() const { return *graph_; }
  const std::vector<Pair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  const std::vector<std::string>& warnings() const { return warnings_; }

  /// u_J in normal form.
  const AlgebraElement& element() const { return element_; }

  std::vector<Path> first_components() const;
  std::vector<Path> second_components() const;
  /// Index of the pair whose first component is mu.
  std::optional<std::size_t> find_first(const Path& mu) const;
  std::optional<std::size_t> find(const Pair& p) const;

  std::size_t max_length() const;

  bool operator==(const PairSet& o) const { return pairs_ == o.pairs_; }

 private:
  GraphPtr graph_;
  std::vector<Pair> pairs_;
  std::vector<std::string> warnings_;
  AlgebraElement element_;
};

/// Reads a presentation off a unitary of the polynomial class, refining the
/// second components to a common depth and merging complete sibling families
/// back. Throws PairSetError (NotUnitary / NotPolynomial).
PairSet element_to_pairset(const AlgebraElement& u, std::size_t max_extra_depth = 6);

/// Lambda_J applied to an arbitrary element, via
/// Lambda(S_mu S_nu^*) = u_{|mu|} S_mu S_nu^* u_{|nu|}^*.
AlgebraElement lambda_apply(const PairSet& j, const AlgebraElement& a);

/// u_{|mu|} S_mu = Lambda(S_mu).
AlgebraElement lambda_of_path(const PairSet& j, const Path& mu);

enum class Side { First = 1, Second = 2 };

/// Members of the chosen side that extend nu; they partition nu.
/// Throws DomainError if none does.
std::vector<Path> contains_partition_of_prefix(const PairSet& j, Side side, const Path& nu);

struct RandomUnitaryOptions {
  std::size_t max_len = 3;
  /// Upper bound on the number of refinement steps per partition.
  std::size_t max_refinements = 4;
  std::size_t max_attempts = 2000;
};

class GenerationError : public Error {
 public:
  using Error::Error;
};

/// Deterministic for a given seed. Grows two random partitions of unity and
/// pairs members of equal (source, range) by a random perfect matching.
PairSet random_unitary(GraphPtr graph, std::uint64_t seed, RandomUnitaryOptions options = {});

std::string to_string(const Graph& g, const Pair& p);

}  // namespace graphalg
