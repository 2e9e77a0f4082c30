#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphalg/pairset.hpp"

namespace graphalg {

/// The pair (mu, e kappa) seen as a coding-graph vertex; e is its E-letter.
struct CodingVertex {
  Path mu;
  Edge e{};
  Path kappa;

  bool operator==(const CodingVertex&) const = default;
};

enum class LabelKind { Positive, Zero, Negative };

/// S_path, P_{vertex of path}, or S_path^*. Zero labels carry a vertex path.
struct EdgeLabel {
  LabelKind kind = LabelKind::Zero;
  Path path;

  bool operator==(const EdgeLabel&) const = default;
};

struct CodingEdge {
  std::size_t source = 0;
  std::size_t target = 0;
  EdgeLabel label;
};

/// A path in the coding graph: a start vertex and consecutive edge indices.
struct CodingPath {
  std::size_t start = 0;
  std::vector<std::size_t> edges;

  std::size_t length() const { return edges.size(); }
  bool operator==(const CodingPath&) const = default;
};

class CodingGraph {
 public:
  /// Vertices are the pairs of j in their sorted order; edges are sorted by
  /// (source, target). There is at most one edge per ordered vertex pair.
  static CodingGraph build(const PairSet& j);

  /// Arbitrary labeled graph over the same vertex type, for hand-built or
  /// mutated instances. Edges are taken as given.
  CodingGraph(GraphPtr graph, std::vector<CodingVertex> vertices, std::vector<CodingEdge> edges);

  const GraphPtr& graph() const { return graph_; }
  const Graph& g() const { return *graph_; }
  const std::vector<CodingVertex>& vertices() const { return vertices_; }
  const std::vector<CodingEdge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const CodingVertex& vertex(std::size_t i) const { return vertices_.at(i); }
  const CodingEdge& edge(std::size_t i) const { return edges_.at(i); }

  /// Edge indices leaving / entering vertex i, in edge order.
  const std::vector<std::size_t>& out_edges(std::size_t i) const { return out_.at(i); }
  const std::vector<std::size_t>& in_edges(std::size_t i) const { return in_.at(i); }

  std::optional<std::size_t> find_vertex(const Path& mu, const Path& nu) const;
  std::optional<std::size_t> find_edge(std::size_t source, std::size_t target) const;

  /// nu = e kappa of vertex i.
  Path second_component(std::size_t i) const;

 private:
  GraphPtr graph_;
  std::vector<CodingVertex> vertices_;
  std::vector<CodingEdge> edges_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

/// S_{kappa_1}^* S_{mu_2}, or nullopt when it vanishes.
std::optional<EdgeLabel> edge_label_between(const CodingVertex& from, const CodingVertex& to);

long edge_degree(const EdgeLabel& label);
inline long edge_degree(const CodingEdge& e) { return edge_degree(e.label); }

/// The label as an algebra element.
AlgebraElement label_element(const GraphPtr& graph, const EdgeLabel& label);
std::string label_text(const Graph& g, const EdgeLabel& label);

enum class CodingClass { AllNonNegative, HasNonPositiveCycle, HasNegativeEdges };

struct Classification {
  CodingClass kind = CodingClass::AllNonNegative;
  /// A cycle of edges of degree <= 0, present iff kind is HasNonPositiveCycle.
  std::optional<CodingPath> witness;
  std::size_t negative_edges = 0;
};

Classification classify(const CodingGraph& cg);
std::string to_string(CodingClass c);

/// Throws InputError if p is not a path in cg.
void check_coding_path(const CodingGraph& cg, const CodingPath& p);
std::size_t path_end(const CodingGraph& cg, const CodingPath& p);

/// Word of E-letters of the visited vertices; length |p| + 1.
Path e_label(const CodingGraph& cg, const CodingPath& p);

/// L_s(p) = S_mu of the start vertex, as a path.
const Path& ls_path(const CodingGraph& cg, const CodingPath& p);
/// L_r(p) = S_kappa of the end vertex, as a path.
const Path& lr_path(const CodingGraph& cg, const CodingPath& p);
/// L_J(p): the product of edge labels (P_{r(mu)} for a length-0 path).
AlgebraElement label_product(const CodingGraph& cg, const CodingPath& p);

/// All coding paths whose E-label is alpha (|alpha| >= 1), optionally only
/// those starting at `start`.
std::vector<CodingPath> paths_with_e_label(const CodingGraph& cg, const Path& alpha,
                                           std::optional<std::size_t> start = std::nullopt);

/// Lambda(S_alpha) as the sum of L_s L_J L_r^* over coding paths with E-label
/// alpha. Throws DomainError for |alpha| = 0.
AlgebraElement image_of_path(const CodingGraph& cg, const Path& alpha);
AlgebraElement image_of_path(const PairSet& j, const Path& alpha);

/// P_mu Lambda(S_delta) as the sum of S_mu L_J L_r^* over coding paths from
/// J_mu with E-label delta. Throws DomainError if mu is not a first component
/// or |delta| = 0.
AlgebraElement project_image(const CodingGraph& cg, const Path& mu, const Path& delta);

struct ResolvingReport {
  bool right_resolving = true;
  /// Pairs of distinct edges with one source and equal labels.
  std::vector<std::pair<std::size_t, std::size_t>> right_witnesses;
  /// False when the graph is not AllNonNegative and the check was skipped.
  bool left_checked = false;
  bool left_resolving = true;
  /// Pairs of distinct edges with one target and equal E-labels.
  std::vector<std::pair<std::size_t, std::size_t>> left_witnesses;
};

ResolvingReport check_resolving(const CodingGraph& cg);

/// "(mu, e kappa)" in path text syntax.
std::string vertex_text(const CodingGraph& cg, std::size_t i);

/// Deterministic DOT; nodes labeled "e | mu / kappa", edges "L=<label> d=<deg>".
std::string to_dot(const CodingGraph& cg);

}  // namespace graphalg
