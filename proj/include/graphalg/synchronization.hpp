#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphalg/splitting.hpp"

namespace graphalg {

/// Pairs of distinct coding vertices carrying the same E-letter, with an edge
/// {x,y} -> {x',y'} whenever x -> x' and y -> y' are coding edges. The
/// unordered form stores x < y; the ordered form keeps both orders and is
/// what cycle witnesses are read from.
class PairGraph {
 public:
  static PairGraph build(const CodingGraph& cg, bool ordered = false);

  bool ordered() const { return ordered_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& vertices() const { return vertices_; }
  /// Indices into vertices(), sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  const std::vector<std::size_t>& successors(std::size_t i) const { return succ_.at(i); }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

 private:
  bool ordered_ = false;
  std::vector<std::pair<std::size_t, std::size_t>> vertices_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> succ_;
};

std::string to_dot(const PairGraph& pg, const CodingGraph& cg);

/// Two closed coding walks with equal E-labels and distinct base vertices.
struct CycleWitness {
  CodingPath first;
  CodingPath second;
};

struct SyncResult {
  bool synchronizing = false;
  /// Least m such that equal E-labels of length-m paths force equal sources.
  std::size_t delay = 0;
  std::optional<CycleWitness> witness;
};

/// Requires an AllNonNegative coding graph (DomainError otherwise). The graph
/// is left-synchronizing iff the pair graph is acyclic; the delay is one more
/// than its longest path, or 0 when it has no vertices.
SyncResult is_left_synchronizing(const CodingGraph& cg);

enum class Outcome { Auto, NotAutoNonPositiveCycle, NotAutoNotSynchronizing };

std::string to_string(Outcome o);

struct DiagonalVerdict {
  Outcome outcome = Outcome::Auto;
  std::optional<std::size_t> delay;
  /// The non-positive cycle, for NotAutoNonPositiveCycle.
  std::optional<CodingPath> cycle;
  /// The E-equal cycles, for NotAutoNotSynchronizing.
  std::optional<CycleWitness> cycles;
  SplitResult split;
};

/// Splits until the coding graph is decided, then checks synchronization.
/// Only fuel errors propagate.
DiagonalVerdict diagonal_verdict(const PairSet& j, SplitOptions options = {});

/// For a NotAuto verdict, a path mu with P_mu outside the image of the
/// diagonal: for a non-positive cycle, the first component of its base vertex
/// extended through single-exit vertices and then by the least edge; for a
/// synchronization failure, the first component of the base of one cycle.
/// Throws DomainError for Auto.
Path not_in_image_witness(const DiagonalVerdict& verdict);

enum class OntoResult { InImage, NotInImageUpToDepth };

std::string to_string(OntoResult r);

/// Images Lambda(P_alpha) of every path alpha of one length, as canonical
/// cylinder families. Reused across many membership queries.
class DiagonalImageTable {
 public:
  DiagonalImageTable(const PairSet& j, std::size_t depth);

  std::size_t depth() const { return depth_; }
  /// InImage iff the families lying inside Z(mu) cover Z(mu) exactly.
  OntoResult covers(const Path& mu) const;

 private:
  GraphPtr graph_;
  std::size_t depth_;
  std::vector<std::vector<Path>> families_;
};

/// Brute-force test of P_mu in Lambda(span{P_alpha : |alpha| = depth}). One
/// sided: NotInImageUpToDepth does not prove non-membership.
OntoResult diagonal_onto_oracle(const PairSet& j, const Path& mu, std::size_t depth);

/// P_{mu gamma} Lambda(S_{E(xi)}) where S_mu S_gamma = L_s(xi) L_J(xi); checked
/// to equal L_s(xi) L_J(xi) L_r(xi)^*. Requires an AllNonNegative,
/// left-synchronizing coding graph of j (DomainError otherwise).
AlgebraElement summand_in_image(const PairSet& j, const CodingPath& xi);

struct DegreeReport {
  /// Degrees of the graded components of Lambda(S_e), per edge in edge order.
  std::vector<std::vector<long>> degrees;
  bool all_even = false;
  /// All generator images lie in the span of even-degree elements, so the
  /// endomorphism misses every odd-degree element.
  bool fires = false;
  std::string message;
};

DegreeReport even_degree_obstruction(const PairSet& j);

}  // namespace graphalg
