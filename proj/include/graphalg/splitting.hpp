#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphalg/coding_graph.hpp"

namespace graphalg {

/// Replaces pair i = (mu, e nu) by {(mu f, e nu f) : s(f) = r(mu)}.
/// Throws DomainError unless vertex i emits only positive edges in the
/// coding graph of j.
PairSet split_at(const PairSet& j, std::size_t pair_index);
PairSet split_at(const PairSet& j, const Pair& pair);

/// A negative edge followed by the zero path to a vertex emitting only
/// positive edges; height is the length of that zero path.
struct FinalNegativeEdge {
  std::size_t edge = 0;
  std::size_t destination = 0;
  std::size_t height = 0;
};

std::vector<FinalNegativeEdge> final_negative_edges(const CodingGraph& cg);

enum class TieBreak { Lexicographic, Random };

struct SplitOptions {
  /// Round cap; defaults to 10000 or the GRAPHALG_FUEL environment variable.
  std::size_t fuel = 0;
  TieBreak tie_break = TieBreak::Lexicographic;
  std::uint64_t seed = 0;
};

/// The default fuel: GRAPHALG_FUEL when set to a positive integer, else 10000.
std::size_t default_fuel();

struct SplitRound {
  std::size_t round = 0;
  Pair split;
  /// Negative edges and class of the coding graph before this split.
  std::size_t negative_edges = 0;
  CodingClass before = CodingClass::HasNegativeEdges;
};

struct SplitResult {
  PairSet j;
  CodingGraph graph;
  Classification classification;
  std::vector<SplitRound> trace;
};

/// Splits at the destination of a lowest-height final negative edge until the
/// coding graph has a non-positive cycle or only non-negative edges. Each
/// round asserts that the unitary is unchanged. Throws FuelExhausted when the
/// round cap is hit.
SplitResult run_splitting_algorithm(const PairSet& j, SplitOptions options = {});

/// Checks the degree bookkeeping of one split: every old edge touching the
/// split vertex has the descendants and degrees the splitting rules predict,
/// no other edges change, and no unexplained edges appear.
struct SplitCheck {
  bool ok = true;
  std::vector<std::string> failures;
};

SplitCheck verify_split_degree_deltas(const PairSet& before, std::size_t pair_index);

}  // namespace graphalg
