#include "graphalg/pairset.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace graphalg {

std::string to_string(PairSetError::Kind kind) {
  switch (kind) {
    case PairSetError::Kind::SourceMismatch: return "source_mismatch";
    case PairSetError::Kind::RangeMismatch: return "range_mismatch";
    case PairSetError::Kind::FirstNotPartition: return "first_not_partition";
    case PairSetError::Kind::SecondNotPartition: return "second_not_partition";
    case PairSetError::Kind::DuplicateFirst: return "duplicate_first";
    case PairSetError::Kind::EmptySecond: return "empty_second";
    case PairSetError::Kind::NotUnitary: return "not_unitary";
    case PairSetError::Kind::NotPolynomial: return "not_polynomial";
  }
  return "unknown";
}

std::string to_string(const Graph& g, const Pair& p) {
  return "(" + format_path(g, p.mu) + ", " + format_path(g, p.nu) + ")";
}

PairSet PairSet::build(GraphPtr graph, std::vector<Pair> pairs, BuildOptions options) {
  const Graph& g = *graph;
  PairSet out;
  out.graph_ = graph;

  if (options.expand_vertex_pairs) {
    std::vector<Pair> expanded;
    for (auto& p : pairs) {
      if (!p.nu.is_vertex() || p.mu.range() != p.nu.range()) {
        expanded.push_back(std::move(p));
        continue;
      }
      for (Edge e : g.out_edges(p.nu.range())) {
        expanded.push_back({p.mu.extended(g, e), p.nu.extended(g, e)});
      }
    }
    pairs = std::move(expanded);
  }

  for (const auto& p : pairs) {
    if (p.mu.source() != p.nu.source()) {
      throw PairSetError(PairSetError::Kind::SourceMismatch, "pair " + to_string(g, p) + " has s(mu) != s(nu)");
    }
    if (p.mu.range() != p.nu.range()) {
      throw PairSetError(PairSetError::Kind::RangeMismatch, "pair " + to_string(g, p) + " has r(mu) != r(nu)");
    }
    if (p.nu.is_vertex()) {
      throw PairSetError(PairSetError::Kind::EmptySecond,
                         "pair " + to_string(g, p) +
                             " has a length-0 second component; expand it via P_v = sum S_e S_e^* "
                             "(expand_vertex_pairs)");
    }
    if (p.mu.is_vertex()) {
      out.warnings_.push_back("pair " + to_string(g, p) + " has a length-0 first component");
    }
  }

  std::sort(pairs.begin(), pairs.end());
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    if (pairs[i].mu == pairs[i - 1].mu) {
      throw PairSetError(PairSetError::Kind::DuplicateFirst,
                         "first component " + format_path(g, pairs[i].mu) + " occurs twice");
    }
  }
  out.pairs_ = std::move(pairs);

  if (!is_partition_of_unity(g, out.first_components())) {
    throw PairSetError(PairSetError::Kind::FirstNotPartition, "first components are not a partition of unity");
  }
  if (!is_partition_of_unity(g, out.second_components())) {
    throw PairSetError(PairSetError::Kind::SecondNotPartition, "second components are not a partition of unity");
  }

  std::vector<Term> raw;
  for (const auto& p : out.pairs_) raw.push_back({1, {p.mu, p.nu}});
  out.element_ = AlgebraElement::normal_form(graph, std::move(raw));
  if (!is_unitary(out.element_)) {
    throw InternalError("pair set passes the partition test but u_J is not unitary");
  }
  return out;
}

std::vector<Path> PairSet::first_components() const {
  std::vector<Path> out;
  for (const auto& p : pairs_) out.push_back(p.mu);
  return out;
}

std::vector<Path> PairSet::second_components() const {
  std::vector<Path> out;
  for (const auto& p : pairs_) out.push_back(p.nu);
  return out;
}

std::optional<std::size_t> PairSet::find_first(const Path& mu) const {
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (pairs_[i].mu == mu) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> PairSet::find(const Pair& p) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p);
  if (it == pairs_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - pairs_.begin());
}

std::size_t PairSet::max_length() const {
  std::size_t n = 0;
  for (const auto& p : pairs_) n = std::max({n, p.mu.length(), p.nu.length()});
  return n;
}

namespace {

// Depth-L table beta -> gamma with u S_beta = S_gamma, or nullopt if some
// u S_beta is not a single path monomial.
std::optional<std::map<Path, Path>> path_images(const AlgebraElement& u, std::size_t depth) {
  const Graph& g = u.g();
  std::map<Path, Path> table;
  for (Vertex v : g.vertices()) {
    for (const auto& beta : paths_from(g, v, depth)) {
      auto image = multiply(u, AlgebraElement::path(u.graph(), beta));
      if (image.size() != 1) return std::nullopt;
      const auto& [m, c] = *image.terms().begin();
      if (c != 1 || !m.nu.is_vertex() || m.mu.source() != beta.source()) return std::nullopt;
      table.emplace(beta, m.mu);
    }
  }
  return table;
}

}  // namespace

PairSet element_to_pairset(const AlgebraElement& u, std::size_t max_extra_depth) {
  if (!u.graph() || !is_unitary(u)) {
    throw PairSetError(PairSetError::Kind::NotUnitary, "element is not unitary");
  }
  const Graph& g = u.g();
  std::size_t base = 1;
  for (const auto& [m, c] : u.terms()) base = std::max(base, m.nu.length());

  for (std::size_t depth = base; depth <= base + max_extra_depth; ++depth) {
    auto table = path_images(u, depth);
    if (!table) continue;
    // Merge (gamma e, beta e) over all e into (gamma, beta), keeping |beta| >= 1.
    for (std::size_t level = depth; level >= 2; --level) {
      std::map<Path, std::vector<std::pair<Path, Path>>> groups;
      for (const auto& [beta, gamma] : *table) {
        if (beta.length() == level) groups[beta.without_last(g)].emplace_back(beta, gamma);
      }
      for (const auto& [parent, kids] : groups) {
        if (kids.size() != g.out_edges(parent.range()).size()) continue;
        std::optional<Path> common;
        bool ok = true;
        for (const auto& [beta, gamma] : kids) {
          if (gamma.is_vertex() || gamma.back() != beta.back()) {
            ok = false;
            break;
          }
          Path head = gamma.without_last(g);
          if (common && !(*common == head)) {
            ok = false;
            break;
          }
          common = head;
        }
        if (!ok) continue;
        for (const auto& [beta, gamma] : kids) table->erase(beta);
        table->emplace(parent, *common);
      }
    }
    std::vector<Pair> pairs;
    for (const auto& [beta, gamma] : *table) pairs.push_back({gamma, beta});
    try {
      return PairSet::build(u.graph(), std::move(pairs));
    } catch (const PairSetError&) {
      continue;
    }
  }
  throw PairSetError(PairSetError::Kind::NotPolynomial,
                     "unitary has no polynomial presentation up to the searched depth");
}

AlgebraElement lambda_of_path(const PairSet& j, const Path& mu) {
  const auto& graph = j.graph();
  // u_k S_mu = (u S_{mu_1}) (u S_{mu_2}) ... (u S_{mu_k}), from S_e u = Phi(u) S_e.
  AlgebraElement result = AlgebraElement::projection(graph, Path::vertex(mu.source()));
  for (Edge e : mu.edges()) {
    result = multiply(result, multiply(j.element(), AlgebraElement::path(graph, Path::edge(*graph, e))));
  }
  return result;
}

AlgebraElement lambda_apply(const PairSet& j, const AlgebraElement& a) {
  if (a.graph() && !(*a.graph() == j.g())) throw DomainError("element and unitary live over different graphs");
  std::map<Path, AlgebraElement> cache;
  auto image = [&](const Path& p) -> const AlgebraElement& {
    auto it = cache.find(p);
    if (it == cache.end()) it = cache.emplace(p, lambda_of_path(j, p)).first;
    return it->second;
  };
  AlgebraElement out(j.graph());
  for (const auto& [m, c] : a.terms()) {
    out += c * multiply(image(m.mu), adjoint(image(m.nu)));
  }
  return out;
}

std::vector<Path> contains_partition_of_prefix(const PairSet& j, Side side, const Path& nu) {
  std::vector<Path> out;
  for (const auto& p : j.pairs()) {
    const Path& member = side == Side::First ? p.mu : p.nu;
    if (is_prefix(nu, member)) out.push_back(member);
  }
  if (out.empty()) throw DomainError("no member of the chosen side extends " + format_path(j.g(), nu));
  std::sort(out.begin(), out.end());
  if (!is_partition_of_path(j.g(), nu, out)) {
    throw InternalError("members extending a prefix do not partition it");
  }
  return out;
}

namespace {

template <typename T>
void shuffle_in_place(std::vector<T>& xs, std::mt19937_64& rng) {
  for (std::size_t i = xs.size(); i > 1; --i) {
    std::size_t k = static_cast<std::size_t>(rng() % i);
    std::swap(xs[i - 1], xs[k]);
  }
}

std::vector<Path> grow_partition(const Graph& g, std::mt19937_64& rng, const RandomUnitaryOptions& opt) {
  std::vector<Path> part;
  for (Edge e : g.edges()) part.push_back(Path::edge(g, e));
  std::size_t steps = static_cast<std::size_t>(rng() % (opt.max_refinements + 1));
  for (std::size_t i = 0; i < steps; ++i) {
    std::vector<std::size_t> open;
    for (std::size_t k = 0; k < part.size(); ++k) {
      if (part[k].length() < opt.max_len) open.push_back(k);
    }
    if (open.empty()) break;
    std::size_t pick = open[rng() % open.size()];
    Path parent = part[pick];
    part.erase(part.begin() + static_cast<std::ptrdiff_t>(pick));
    for (Edge e : g.out_edges(parent.range())) part.push_back(parent.extended(g, e));
  }
  return part;
}

}  // namespace

PairSet random_unitary(GraphPtr graph, std::uint64_t seed, RandomUnitaryOptions options) {
  const Graph& g = *graph;
  options.max_len = std::max<std::size_t>(options.max_len, 1);
  std::mt19937_64 rng(seed);
  using Class = std::pair<Vertex, Vertex>;
  for (std::size_t attempt = 0; attempt < options.max_attempts; ++attempt) {
    auto firsts = grow_partition(g, rng, options);
    auto seconds = grow_partition(g, rng, options);
    std::map<Class, std::vector<Path>> a, b;
    for (auto& p : firsts) a[{p.source(), p.range()}].push_back(std::move(p));
    for (auto& p : seconds) b[{p.source(), p.range()}].push_back(std::move(p));
    bool matched = a.size() == b.size();
    for (auto& [cls, members] : a) {
      auto it = b.find(cls);
      if (it == b.end() || it->second.size() != members.size()) {
        matched = false;
        break;
      }
    }
    if (!matched) continue;
    // Inside one (source, range) class every bijection is admissible, so a
    // uniformly shuffled zip is a random perfect matching.
    std::vector<Pair> pairs;
    for (auto& [cls, members] : a) {
      auto& partners = b[cls];
      std::sort(members.begin(), members.end());
      std::sort(partners.begin(), partners.end());
      shuffle_in_place(partners, rng);
      for (std::size_t i = 0; i < members.size(); ++i) pairs.push_back({members[i], partners[i]});
    }
    return PairSet::build(graph, std::move(pairs));
  }
  throw GenerationError("no matching pair of partitions found; reduce max_len or refinements");
}

}  // namespace graphalg
