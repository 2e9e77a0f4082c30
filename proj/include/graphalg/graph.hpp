#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graphalg/errors.hpp"

namespace graphalg {

enum class Vertex : std::uint32_t {};
enum class Edge : std::uint32_t {};

constexpr std::size_t index(Vertex v) { return static_cast<std::size_t>(v); }
constexpr std::size_t index(Edge e) { return static_cast<std::size_t>(e); }

/// Structural problem in a graph description (unknown endpoint, duplicate id).
class GraphError : public InputError {
 public:
  GraphError(const std::string& what, std::string offending_id)
      : InputError(what), offending_id_(std::move(offending_id)) {}
  const std::string& offending_id() const { return offending_id_; }

 private:
  std::string offending_id_;
};

/// Range/source mismatch while composing paths.
class PathError : public InputError {
 public:
  using InputError::InputError;
};

struct EdgeSpec {
  std::string id;
  std::string src;
  std::string dst;
};

/// A finite directed multigraph. Vertex and edge indices follow the
/// lexicographic order of their string ids, so every ordering derived from
/// indices is the lexicographic order on ids.
class Graph {
 public:
  /// Throws GraphError on duplicate ids or undeclared endpoints.
  static Graph from_lists(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges);

  std::size_t vertex_count() const { return vertex_ids_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& vertex_id(Vertex v) const { return vertex_ids_.at(index(v)); }
  const std::string& edge_id(Edge e) const { return edges_.at(index(e)).id; }
  Vertex source(Edge e) const { return edges_.at(index(e)).source; }
  Vertex range(Edge e) const { return edges_.at(index(e)).range; }

  /// Edges with source v, in id order.
  std::span<const Edge> out_edges(Vertex v) const { return out_.at(index(v)); }
  std::span<const Edge> in_edges(Vertex v) const { return in_.at(index(v)); }

  std::optional<Vertex> find_vertex(std::string_view id) const;
  std::optional<Edge> find_edge(std::string_view id) const;
  Vertex vertex(std::string_view id) const;  // throws InputError
  Edge edge(std::string_view id) const;      // throws InputError

  /// The least edge emitted by v; the basis of the Leavitt normal form
  /// eliminates monomials whose two paths both end in this edge.
  Edge special_edge(Vertex v) const;

  /// True iff every edge id is a single character, so paths print as words.
  bool compact_ids() const { return compact_ids_; }

  std::vector<Vertex> vertices() const;
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const;

 private:
  struct EdgeRecord {
    std::string id;
    Vertex source;
    Vertex range;
  };

  std::vector<std::string> vertex_ids_;
  std::vector<EdgeRecord> edges_;
  std::vector<std::vector<Edge>> out_;
  std::vector<std::vector<Edge>> in_;
  bool compact_ids_ = true;
};

using GraphPtr = std::shared_ptr<const Graph>;

/// A finite path. Length-0 paths are vertices; the anchor keeps their source
/// and range well defined. The range is cached at construction so that path
/// algebra does not need the graph.
class Path {
 public:
  Path() = default;

  static Path vertex(Vertex v) { return Path(v, {}, v); }
  static Path edge(const Graph& g, Edge e) { return Path(g.source(e), {e}, g.range(e)); }
  /// Throws PathError if consecutive edges do not compose.
  static Path from_edges(const Graph& g, std::vector<Edge> edges);
  /// Anchored form; `anchor` must equal the source of the first edge.
  static Path from_edges(const Graph& g, Vertex anchor, std::vector<Edge> edges);

  Vertex source() const { return anchor_; }
  Vertex range() const { return range_; }
  std::size_t length() const { return edges_.size(); }
  bool is_vertex() const { return edges_.empty(); }
  const std::vector<Edge>& edges() const { return edges_; }
  Edge front() const { return edges_.front(); }
  Edge back() const { return edges_.back(); }

  /// Append one edge; throws PathError unless s(e) == range().
  Path extended(const Graph& g, Edge e) const;
  /// Drop the final edge. Requires length() >= 1.
  Path without_last(const Graph& g) const;
  /// The path made of edges [from, from+count).
  Path slice(const Graph& g, std::size_t from, std::size_t count) const;

  bool operator==(const Path& o) const { return anchor_ == o.anchor_ && edges_ == o.edges_; }
  /// Lexicographic on edge ids, vertices (length 0) first, ties broken by anchor.
  std::strong_ordering operator<=>(const Path& o) const;

 private:
  Path(Vertex anchor, std::vector<Edge> edges, Vertex range)
      : anchor_(anchor), edges_(std::move(edges)), range_(range) {}

  friend Path concat(const Path& a, const Path& b);
  friend std::optional<Path> strip_prefix(const Path& prefix, const Path& p);

  Vertex anchor_{};
  std::vector<Edge> edges_;
  Vertex range_{};
};

/// ab; throws PathError if r(a) != s(b).
Path concat(const Path& a, const Path& b);

/// a ≺ b: a is an initial segment of b. A vertex v is a prefix of b iff b
/// starts at v.
bool is_prefix(const Path& a, const Path& b);

/// If prefix ≺ p, the remainder (anchored at r(prefix)); else nullopt.
std::optional<Path> strip_prefix(const Path& prefix, const Path& p);

/// All paths of length k starting at v, lexicographic by edge ids.
std::vector<Path> paths_from(const Graph& g, Vertex v, std::size_t k);

/// True iff the cylinders Z(p), p ∈ ps, are pairwise disjoint and cover Z(v).
/// Throws DomainError if some path does not start at v.
bool is_partition(const Graph& g, Vertex v, std::span<const Path> ps);

/// Partition of a path: {ν μ_i} where {μ_i} partitions r(ν). Members not
/// extending nu make the answer false.
bool is_partition_of_path(const Graph& g, const Path& nu, std::span<const Path> ps);

/// True iff, for every vertex v, the members starting at v partition v
/// (the family sums to 1 in the algebra).
bool is_partition_of_unity(const Graph& g, std::span<const Path> ps);

struct ValidationReport {
  bool has_sink = false;
  bool has_source = false;
  bool cycle_without_exit = false;
  std::vector<Vertex> sinks;
  std::vector<Vertex> sources;
  std::optional<Path> exitless_cycle;

  bool accepted() const { return !has_sink && !has_source && !cycle_without_exit; }
};

ValidationReport validate_standing_assumptions(const Graph& g);

/// Text form of a path: vertex paths print as "@id"; edge paths print as a
/// word when all edge ids are single characters and dot-joined otherwise.
std::string format_path(const Graph& g, const Path& p);
/// Inverse of format_path. Also accepts dot-joined ids in compact graphs.
Path parse_path(const Graph& g, std::string_view text);

}  // namespace graphalg
