#include "graphalg/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace graphalg {

namespace {

// Hard cap on rewrite steps in a single normalization.
constexpr std::size_t kRewriteFuel = 50'000'000;

void require_same_graph(const GraphPtr& a, const GraphPtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw DomainError("algebra elements live over different graphs");
}

bool reducible(const Graph& g, const Monomial& m) {
  if (m.mu.is_vertex() || m.nu.is_vertex()) return false;
  Edge last = m.mu.back();
  return last == m.nu.back() && last == g.special_edge(g.source(last));
}

std::string path_word(const Graph& g, const Path& p) {
  return p.is_vertex() ? g.vertex_id(p.source()) : format_path(g, p);
}

}  // namespace

AlgebraElement AlgebraElement::normal_form(GraphPtr graph, std::vector<Term> raw) {
  AlgebraElement out(std::move(graph));
  const Graph& g = *out.graph_;
  std::size_t fuel = kRewriteFuel;
  while (!raw.empty()) {
    Term t = std::move(raw.back());
    raw.pop_back();
    if (t.coeff == 0) continue;
    if (t.monomial.mu.range() != t.monomial.nu.range()) {
      throw DomainError("monomial S_" + path_word(g, t.monomial.mu) + " S_" + path_word(g, t.monomial.nu) +
                        "^* has mismatched ranges");
    }
    if (!reducible(g, t.monomial)) {
      auto [it, inserted] = out.terms_.try_emplace(std::move(t.monomial), t.coeff);
      if (!inserted) {
        it->second += t.coeff;
        if (it->second == 0) out.terms_.erase(it);
      }
      continue;
    }
    if (--fuel == 0) throw FuelExhausted("normal form rewrite exceeded its step budget");
    Edge special = t.monomial.mu.back();
    Path mu = t.monomial.mu.without_last(g);
    Path nu = t.monomial.nu.without_last(g);
    for (Edge e : g.out_edges(g.source(special))) {
      if (e == special) continue;
      raw.push_back({-t.coeff, {mu.extended(g, e), nu.extended(g, e)}});
    }
    raw.push_back({t.coeff, {std::move(mu), std::move(nu)}});
  }
  return out;
}

AlgebraElement AlgebraElement::one(GraphPtr graph) {
  std::vector<Term> raw;
  for (Vertex v : graph->vertices()) raw.push_back({1, {Path::vertex(v), Path::vertex(v)}});
  return normal_form(std::move(graph), std::move(raw));
}

AlgebraElement AlgebraElement::monomial(GraphPtr graph, Path mu, Path nu, Integer coeff) {
  std::vector<Term> raw;
  raw.push_back({std::move(coeff), {std::move(mu), std::move(nu)}});
  return normal_form(std::move(graph), std::move(raw));
}

AlgebraElement AlgebraElement::path(GraphPtr graph, const Path& mu) {
  return monomial(std::move(graph), mu, Path::vertex(mu.range()));
}

AlgebraElement AlgebraElement::path_adjoint(GraphPtr graph, const Path& mu) {
  return monomial(std::move(graph), Path::vertex(mu.range()), mu);
}

AlgebraElement AlgebraElement::projection(GraphPtr graph, const Path& mu) {
  return monomial(std::move(graph), mu, mu);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (!graph_) graph_ = o.graph_;
  require_same_graph(graph_, o.graph_);
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  return *this += Integer(-1) * o;
}

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }

AlgebraElement operator*(const Integer& c, const AlgebraElement& a) {
  AlgebraElement out(a.graph());
  if (c == 0) return out;
  std::vector<Term> raw;
  for (const auto& [m, k] : a.terms()) raw.push_back({k * c, m});
  return AlgebraElement::normal_form(a.graph(), std::move(raw));
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_graph(a.graph(), b.graph());
  std::vector<Term> raw;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      // S_mu S_nu^* S_alpha S_beta^*
      if (auto gamma = strip_prefix(ma.nu, mb.mu)) {
        raw.push_back({ca * cb, {concat(ma.mu, *gamma), mb.nu}});
      } else if (auto gamma2 = strip_prefix(mb.mu, ma.nu)) {
        raw.push_back({ca * cb, {ma.mu, concat(mb.nu, *gamma2)}});
      }
    }
  }
  return AlgebraElement::normal_form(a.graph(), std::move(raw));
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return multiply(a, b); }

AlgebraElement adjoint(const AlgebraElement& a) {
  std::vector<Term> raw;
  for (const auto& [m, c] : a.terms()) raw.push_back({c, {m.nu, m.mu}});
  return AlgebraElement::normal_form(a.graph(), std::move(raw));
}

AlgebraElement shift_phi(const AlgebraElement& a) {
  const Graph& g = a.g();
  std::vector<Term> raw;
  for (Edge e : g.edges()) {
    Path pe = Path::edge(g, e);
    for (const auto& [m, c] : a.terms()) {
      // S_e S_mu S_nu^* S_e^* is nonzero only when both paths start at r(e).
      if (m.mu.source() != g.range(e) || m.nu.source() != g.range(e)) continue;
      raw.push_back({c, {concat(pe, m.mu), concat(pe, m.nu)}});
    }
  }
  return AlgebraElement::normal_form(a.graph(), std::move(raw));
}

AlgebraElement u_power(const AlgebraElement& u, int k) {
  if (k < 1) throw DomainError("u_k is defined for k >= 1");
  AlgebraElement result = u;
  AlgebraElement shifted = u;
  for (int i = 1; i < k; ++i) {
    shifted = shift_phi(shifted);
    result = multiply(result, shifted);
  }
  return result;
}

bool is_unitary(const AlgebraElement& u) {
  if (!u.graph()) return false;
  auto one = AlgebraElement::one(u.graph());
  auto star = adjoint(u);
  return multiply(u, star) == one && multiply(star, u) == one;
}

std::map<long, AlgebraElement> graded_components(const AlgebraElement& a) {
  std::map<long, AlgebraElement> out;
  for (const auto& [m, c] : a.terms()) {
    auto [it, _] = out.try_emplace(m.degree(), a.graph());
    it->second += AlgebraElement::monomial(a.graph(), m.mu, m.nu, c);
  }
  return out;
}

std::size_t max_path_length(const AlgebraElement& a) {
  std::size_t n = 0;
  for (const auto& [m, c] : a.terms()) n = std::max({n, m.mu.length(), m.nu.length()});
  return n;
}

std::map<Path, Integer> diagonal_coefficients(const AlgebraElement& a, std::size_t depth) {
  const Graph& g = a.g();
  std::map<Path, Integer> out;
  for (const auto& [m, c] : a.terms()) {
    if (!m.is_diagonal()) throw DomainError("element has an off-diagonal term");
    if (m.mu.length() > depth) throw DomainError("refinement depth below a term's length");
    for (const auto& tail : paths_from(g, m.mu.range(), depth - m.mu.length())) {
      auto [it, inserted] = out.try_emplace(concat(m.mu, tail), c);
      if (!inserted) it->second += c;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

namespace {

struct DiagonalTerm {
  const Path* path;
  Integer coeff;
};

// Walks the prefix tree below p. `acc` is the total coefficient of terms that
// are prefixes of p; `below` holds the terms strictly extending p. Returns true
// when the whole cylinder of p is in the support (so the parent may merge it).
bool collect_support(const Graph& g, const Path& p, const Integer& acc, const std::vector<DiagonalTerm>& below,
                     std::vector<Path>& out) {
  if (below.empty()) {
    if (acc == 1) {
      out.push_back(p);
      return true;
    }
    if (acc != 0) throw DomainError("element is not a projection in the diagonal");
    return false;
  }
  const std::size_t depth = p.length();
  const std::size_t mark = out.size();
  bool all_full = true;
  for (Edge e : g.out_edges(p.range())) {
    Integer child_acc = acc;
    std::vector<DiagonalTerm> child_below;
    for (const auto& t : below) {
      if (t.path->edges()[depth] != e) continue;
      if (t.path->length() == depth + 1) {
        child_acc += t.coeff;
      } else {
        child_below.push_back(t);
      }
    }
    all_full = collect_support(g, p.extended(g, e), child_acc, child_below, out) && all_full;
  }
  if (!all_full) return false;
  out.resize(mark);
  out.push_back(p);
  return true;
}

}  // namespace

std::vector<Path> diagonal_support(const AlgebraElement& a) {
  const Graph& g = a.g();
  std::vector<Path> out;
  if (a.is_zero()) return out;
  for (const auto& [m, c] : a.terms()) {
    if (!m.is_diagonal()) throw DomainError("element has an off-diagonal term");
  }
  for (Vertex v : g.vertices()) {
    Integer acc = 0;
    std::vector<DiagonalTerm> below;
    for (const auto& [m, c] : a.terms()) {
      if (m.mu.source() != v) continue;
      if (m.mu.is_vertex()) {
        acc += c;
      } else {
        below.push_back({&m.mu, c});
      }
    }
    collect_support(g, Path::vertex(v), acc, below, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const AlgebraElement& a) {
  if (a.is_zero()) return "0";
  const Graph& g = a.g();
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1) os << mag << " ";
    if (m.is_diagonal()) {
      os << "P_" << path_word(g, m.mu);
    } else if (m.nu.is_vertex()) {
      os << "S_" << path_word(g, m.mu);
    } else if (m.mu.is_vertex()) {
      os << "S_" << path_word(g, m.nu) << "^*";
    } else {
      os << "S_" << path_word(g, m.mu) << " S_" << path_word(g, m.nu) << "^*";
    }
  }
  return os.str();
}

}  // namespace graphalg
