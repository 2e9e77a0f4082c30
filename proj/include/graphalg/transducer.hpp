#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graphalg/synchronization.hpp"

namespace graphalg {

using Word = std::vector<std::size_t>;

/// A run entered the sink: the input is not a word the machine accepts.
class InvalidInput : public InputError {
 public:
  using InputError::InputError;
};

/// A full period of input produced no output.
class StalledOutput : public InternalError {
 public:
  using InternalError::InternalError;
};

/// prefix . period^infinity over letter indices. Canonical form: the period
/// is primitive and no trailing prefix letter can be rotated into it.
struct EventuallyPeriodicWord {
  Word prefix;
  Word period;

  /// Throws InputError for an empty period.
  static EventuallyPeriodicWord make(Word prefix, Word period);
  bool operator==(const EventuallyPeriodicWord&) const = default;
  std::size_t letter(std::size_t i) const;
};

/// Letters are edge indices of g. Words are single characters per edge for
/// compact graphs and dot-joined ids otherwise.
Word parse_word(const Graph& g, std::string_view text);
std::string format_word(const Graph& g, const Word& w);
/// "prefix(period)^inf", with the prefix omitted when empty.
std::string format_word(const Graph& g, const EventuallyPeriodicWord& w);
/// Edge-id list form used in JSON.
std::vector<std::string> word_ids(const Graph& g, const Word& w);

/// (A, B, S, s0, tau) with tau total. Letters and states are indices into the
/// name vectors; letters rejected by a state lead to `sink`, which loops on
/// every letter, emits nothing and marks the run invalid.
struct Transducer {
  struct Step {
    std::size_t next = 0;
    Word output;
  };

  std::vector<std::string> input_alphabet;
  std::vector<std::string> output_alphabet;
  std::vector<std::string> states;
  std::size_t initial = 0;
  std::optional<std::size_t> sink;
  /// table[state][letter].
  std::vector<std::vector<Step>> table;

  const Step& step(std::size_t state, std::size_t letter) const { return table.at(state).at(letter); }
  std::size_t state_count() const { return states.size(); }
};

/// Single state, tau(s, a) = (s, a).
Transducer identity_transducer(std::vector<std::string> alphabet);

/// Output of the first n input letters. Throws InvalidInput on the sink.
Word run_prefix(const Transducer& t, const Word& input);

/// Output on an eventually periodic input, canonicalized. Throws InvalidInput
/// on the sink and StalledOutput when a period emits nothing.
EventuallyPeriodicWord run(const Transducer& t, const EventuallyPeriodicWord& w);

/// Machine reading `first`'s input and writing `second`'s output. Throws
/// DomainError unless first's output alphabet is second's input alphabet.
Transducer compose(const Transducer& second, const Transducer& first);

/// Deterministic DOT; edges are labeled "a / w" with w = "ε" when empty.
std::string to_dot(const Transducer& t);

/// Coding edges named "(mu, nu)->(mu', nu')".
std::vector<std::string> coding_edge_names(const CodingGraph& cg);

/// phi on E^{m+2}: the common first edge of every coding path of length m+1
/// with that E-label, or none.
struct PhiRow {
  Word word;
  std::optional<std::size_t> edge;
  /// L_s of the source of the edge, and the path of its L_J label.
  Path s;
  Path l;
};

struct PhiTable {
  GraphPtr graph;
  std::size_t m = 0;
  std::vector<std::string> coding_edges;
  /// Every path of length m + 2, in lexicographic order.
  std::vector<PhiRow> rows;

  /// nullptr for words that are not paths.
  const PhiRow* find(const Word& w) const;
};

/// Requires an AllNonNegative graph on which labels of length m + 2 fix the
/// first edge (DomainError otherwise).
PhiTable phi_map(const CodingGraph& cg, std::size_t m);

/// Buffers m + 1 letters, then emits phi(buffer . a) and slides.
Transducer sliding_block_transducer(const PhiTable& phi);

/// Reads coding edges: the first step writes L_s of the source, each later
/// step writes the L_J label of the edge being left. Requires AllNonNegative.
Transducer output_transducer(const CodingGraph& cg);

/// Everything needed to evaluate psi_u for a unitary with an Auto verdict.
struct PsiMachine {
  DiagonalVerdict verdict;
  PhiTable phi;
  Transducer slide;
  Transducer output;
  Transducer composite;
};

/// Throws DomainError unless the verdict is Auto.
PsiMachine build_psi_machine(const PairSet& j, SplitOptions options = {});

/// psi_u(w) by the window recipe S(phi(w_1..w_{m+2})) L(phi(w_1..)) L(phi(w_2..))...,
/// checked against the composite transducer.
EventuallyPeriodicWord psi_eval(const PsiMachine& machine, const EventuallyPeriodicWord& w);
EventuallyPeriodicWord psi_eval(const PairSet& j, const EventuallyPeriodicWord& w);

/// S_beta^* Lambda(S_alpha) != 0. A vertex beta is the empty prefix.
bool psi_finite_check(const PairSet& j, const Path& alpha_prefix, const Path& beta_prefix);

}  // namespace graphalg
