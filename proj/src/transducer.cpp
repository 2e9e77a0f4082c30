#include "graphalg/transducer.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace graphalg {

namespace {

// Smallest p with w = x^(n/p) for |x| = p.
std::size_t primitive_root_length(const Word& w) {
  std::size_t n = w.size();
  std::vector<std::size_t> fail(n + 1, 0);
  for (std::size_t i = 1, k = 0; i < n; ++i) {
    while (k > 0 && w[i] != w[k]) k = fail[k];
    if (w[i] == w[k]) ++k;
    fail[i + 1] = k;
  }
  std::size_t p = n - fail[n];
  return n % p == 0 ? p : n;
}

std::string join_letters(const std::vector<std::string>& names, const Word& w) {
  bool compact = std::all_of(w.begin(), w.end(), [&](std::size_t a) { return names.at(a).size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && !compact) out += '.';
    out += names.at(w[i]);
  }
  return out;
}

std::vector<std::string> edge_names(const Graph& g) {
  std::vector<std::string> out;
  for (Edge e : g.edges()) out.push_back(g.edge_id(e));
  return out;
}

bool composes(const Graph& g, std::size_t a, std::size_t b) {
  return g.range(Edge(a)) == g.source(Edge(b));
}

void require_non_negative(const CodingGraph& cg) {
  if (classify(cg).kind != CodingClass::AllNonNegative) {
    throw DomainError("transducers are built only from coding graphs with non-negative edges");
  }
}

void append(Word& out, const Path& p) {
  for (Edge e : p.edges()) out.push_back(index(e));
}

}  // namespace

EventuallyPeriodicWord EventuallyPeriodicWord::make(Word prefix, Word period) {
  if (period.empty()) throw InputError("eventually periodic word needs a non-empty period");
  period.resize(primitive_root_length(period));
  while (!prefix.empty() && prefix.back() == period.back()) {
    prefix.pop_back();
    std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
  }
  return {std::move(prefix), std::move(period)};
}

std::size_t EventuallyPeriodicWord::letter(std::size_t i) const {
  return i < prefix.size() ? prefix[i] : period[(i - prefix.size()) % period.size()];
}

Word parse_word(const Graph& g, std::string_view text) {
  Word out;
  if (text.empty()) return out;
  if (g.compact_ids() && text.find('.') == std::string_view::npos) {
    for (char c : text) out.push_back(index(g.edge(std::string_view(&c, 1))));
    return out;
  }
  std::size_t from = 0;
  while (true) {
    std::size_t dot = text.find('.', from);
    out.push_back(index(g.edge(text.substr(from, dot == std::string_view::npos ? dot : dot - from))));
    if (dot == std::string_view::npos) break;
    from = dot + 1;
  }
  return out;
}

std::string format_word(const Graph& g, const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && !g.compact_ids()) out += '.';
    out += g.edge_id(Edge(w[i]));
  }
  return out;
}

std::string format_word(const Graph& g, const EventuallyPeriodicWord& w) {
  std::string sep = !g.compact_ids() && !w.prefix.empty() ? "." : "";
  return format_word(g, w.prefix) + sep + "(" + format_word(g, w.period) + ")^inf";
}

std::vector<std::string> word_ids(const Graph& g, const Word& w) {
  std::vector<std::string> out;
  for (std::size_t a : w) out.push_back(g.edge_id(Edge(a)));
  return out;
}

Transducer identity_transducer(std::vector<std::string> alphabet) {
  Transducer t;
  t.input_alphabet = alphabet;
  t.output_alphabet = std::move(alphabet);
  t.states = {"id"};
  t.table.resize(1);
  for (std::size_t a = 0; a < t.input_alphabet.size(); ++a) t.table[0].push_back({0, {a}});
  return t;
}

Word run_prefix(const Transducer& t, const Word& input) {
  Word out;
  std::size_t q = t.initial;
  for (std::size_t a : input) {
    if (a >= t.input_alphabet.size()) throw InvalidInput("letter outside the input alphabet");
    const auto& s = t.step(q, a);
    if (s.next == t.sink) throw InvalidInput("input rejected after " + std::to_string(out.size()) + " output letters");
    out.insert(out.end(), s.output.begin(), s.output.end());
    q = s.next;
  }
  return out;
}

EventuallyPeriodicWord run(const Transducer& t, const EventuallyPeriodicWord& w) {
  if (w.period.empty()) throw InputError("eventually periodic word needs a non-empty period");
  Word out;
  std::size_t q = t.initial;
  auto feed = [&](const Word& letters) {
    for (std::size_t a : letters) {
      if (a >= t.input_alphabet.size()) throw InvalidInput("letter outside the input alphabet");
      const auto& s = t.step(q, a);
      if (s.next == t.sink) throw InvalidInput("input rejected by the transducer");
      out.insert(out.end(), s.output.begin(), s.output.end());
      q = s.next;
    }
  };
  feed(w.prefix);
  // State at each period boundary; the first repeat closes the output cycle.
  std::vector<std::size_t> boundary_state;
  std::vector<std::size_t> boundary_out;
  while (true) {
    auto seen = std::find(boundary_state.begin(), boundary_state.end(), q);
    if (seen != boundary_state.end()) {
      std::size_t at = boundary_out[seen - boundary_state.begin()];
      Word period(out.begin() + static_cast<std::ptrdiff_t>(at), out.end());
      if (period.empty()) throw StalledOutput("a period of input produced no output");
      out.resize(at);
      return EventuallyPeriodicWord::make(std::move(out), std::move(period));
    }
    boundary_state.push_back(q);
    boundary_out.push_back(out.size());
    feed(w.period);
  }
}

Transducer compose(const Transducer& second, const Transducer& first) {
  if (first.output_alphabet != second.input_alphabet) {
    throw DomainError("output alphabet of the first transducer is not the input alphabet of the second");
  }
  Transducer t;
  t.input_alphabet = first.input_alphabet;
  t.output_alphabet = second.output_alphabet;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index_of;
  std::deque<std::pair<std::size_t, std::size_t>> queue;
  auto intern = [&](std::size_t q1, std::size_t q2) {
    auto [it, inserted] = index_of.emplace(std::pair{q1, q2}, t.states.size());
    if (inserted) {
      t.states.push_back("(" + first.states[q1] + ", " + second.states[q2] + ")");
      t.table.emplace_back();
      queue.emplace_back(q1, q2);
    }
    return it->second;
  };
  auto sink = [&] {
    if (!t.sink) {
      t.sink = t.states.size();
      t.states.push_back("sink");
      t.table.emplace_back(t.input_alphabet.size(), Transducer::Step{*t.sink, {}});
    }
    return *t.sink;
  };
  t.initial = intern(first.initial, second.initial);
  while (!queue.empty()) {
    auto [q1, q2] = queue.front();
    queue.pop_front();
    std::size_t self = index_of.at({q1, q2});
    std::vector<Transducer::Step> row;
    for (std::size_t a = 0; a < t.input_alphabet.size(); ++a) {
      const auto& s1 = first.step(q1, a);
      Transducer::Step step;
      std::size_t n2 = q2;
      bool dead = s1.next == first.sink;
      for (std::size_t b : s1.output) {
        if (dead) break;
        const auto& s2 = second.step(n2, b);
        dead = s2.next == second.sink;
        step.output.insert(step.output.end(), s2.output.begin(), s2.output.end());
        n2 = s2.next;
      }
      if (dead) {
        row.push_back({sink(), {}});
      } else {
        step.next = intern(s1.next, n2);
        row.push_back(std::move(step));
      }
    }
    t.table[self] = std::move(row);
  }
  return t;
}

std::string to_dot(const Transducer& t) {
  // Letters leading to the sink are omitted.
  std::ostringstream os;
  os << "digraph transducer {\n";
  for (std::size_t q = 0; q < t.state_count(); ++q) {
    if (q == t.sink) continue;
    os << "  q" << q << " [label=\"" << t.states[q] << "\"" << (q == t.initial ? ", shape=doublecircle" : "")
       << "];\n";
  }
  for (std::size_t q = 0; q < t.state_count(); ++q) {
    if (q == t.sink) continue;
    for (std::size_t a = 0; a < t.input_alphabet.size(); ++a) {
      const auto& s = t.step(q, a);
      if (s.next == t.sink) continue;
      std::string out = s.output.empty() ? "ε" : join_letters(t.output_alphabet, s.output);
      os << "  q" << q << " -> q" << s.next << " [label=\"" << t.input_alphabet[a] << " / " << out << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::vector<std::string> coding_edge_names(const CodingGraph& cg) {
  std::vector<std::string> out;
  for (const auto& e : cg.edges()) out.push_back(vertex_text(cg, e.source) + "->" + vertex_text(cg, e.target));
  return out;
}

const PhiRow* PhiTable::find(const Word& w) const {
  auto it = std::lower_bound(rows.begin(), rows.end(), w, [](const PhiRow& r, const Word& x) { return r.word < x; });
  return it != rows.end() && it->word == w ? &*it : nullptr;
}

PhiTable phi_map(const CodingGraph& cg, std::size_t m) {
  require_non_negative(cg);
  const Graph& g = cg.g();
  PhiTable phi;
  phi.graph = cg.graph();
  phi.m = m;
  phi.coding_edges = coding_edge_names(cg);
  for (Vertex v : g.vertices()) {
    for (const Path& alpha : paths_from(g, v, m + 2)) {
      PhiRow row;
      append(row.word, alpha);
      for (const auto& xi : paths_with_e_label(cg, alpha)) {
        std::size_t first = xi.edges.front();
        if (row.edge && *row.edge != first) {
          throw DomainError("the label " + format_path(g, alpha) + " does not fix the first coding edge");
        }
        row.edge = first;
      }
      if (row.edge) {
        const auto& e = cg.edge(*row.edge);
        row.s = cg.vertex(e.source).mu;
        row.l = e.label.path;
      }
      phi.rows.push_back(std::move(row));
    }
  }
  std::sort(phi.rows.begin(), phi.rows.end(), [](const PhiRow& a, const PhiRow& b) { return a.word < b.word; });
  return phi;
}

Transducer sliding_block_transducer(const PhiTable& phi) {
  const Graph& g = *phi.graph;
  Transducer t;
  t.input_alphabet = edge_names(g);
  t.output_alphabet = phi.coding_edges;
  std::map<Word, std::size_t> index_of;
  std::deque<Word> queue;
  auto intern = [&](const Word& buffer) {
    auto [it, inserted] = index_of.emplace(buffer, t.states.size());
    if (inserted) {
      t.states.push_back(buffer.empty() ? "ε" : format_word(g, buffer));
      t.table.emplace_back();
      queue.push_back(buffer);
    }
    return it->second;
  };
  t.initial = intern({});
  t.sink = t.states.size();
  t.states.push_back("sink");
  t.table.emplace_back(t.input_alphabet.size(), Transducer::Step{*t.sink, {}});
  while (!queue.empty()) {
    Word buffer = queue.front();
    queue.pop_front();
    std::size_t self = index_of.at(buffer);
    std::vector<Transducer::Step> row;
    for (std::size_t a = 0; a < t.input_alphabet.size(); ++a) {
      if (!buffer.empty() && !composes(g, buffer.back(), a)) {
        row.push_back({*t.sink, {}});
        continue;
      }
      Word next = buffer;
      next.push_back(a);
      if (next.size() <= phi.m + 1) {
        row.push_back({intern(next), {}});
        continue;
      }
      const PhiRow* r = phi.find(next);
      if (r == nullptr || !r->edge) {
        row.push_back({*t.sink, {}});
        continue;
      }
      next.erase(next.begin());
      row.push_back({intern(next), {*r->edge}});
    }
    t.table[self] = std::move(row);
  }
  return t;
}

Transducer output_transducer(const CodingGraph& cg) {
  require_non_negative(cg);
  const Graph& g = cg.g();
  std::size_t n = cg.edge_count();
  Transducer t;
  t.input_alphabet = coding_edge_names(cg);
  t.output_alphabet = edge_names(g);
  // State 0 is the start; state 1 + e remembers the last coding edge e.
  t.states.push_back("start");
  for (std::size_t e = 0; e < n; ++e) t.states.push_back(t.input_alphabet[e]);
  t.sink = t.states.size();
  t.states.push_back("sink");
  t.table.resize(t.states.size());
  for (std::size_t f = 0; f < n; ++f) {
    Word out;
    append(out, cg.vertex(cg.edge(f).source).mu);
    t.table[0].push_back({1 + f, std::move(out)});
  }
  for (std::size_t e = 0; e < n; ++e) {
    Word label;
    append(label, cg.edge(e).label.path);
    for (std::size_t f = 0; f < n; ++f) {
      if (cg.edge(f).source == cg.edge(e).target) {
        t.table[1 + e].push_back({1 + f, label});
      } else {
        t.table[1 + e].push_back({*t.sink, {}});
      }
    }
  }
  t.table[*t.sink].assign(n, Transducer::Step{*t.sink, {}});
  return t;
}

PsiMachine build_psi_machine(const PairSet& j, SplitOptions options) {
  auto verdict = diagonal_verdict(j, options);
  if (verdict.outcome != Outcome::Auto) {
    throw DomainError("the diagonal is not an automorphism (" + to_string(verdict.outcome) + ")");
  }
  auto phi = phi_map(verdict.split.graph, *verdict.delay);
  auto slide = sliding_block_transducer(phi);
  auto output = output_transducer(verdict.split.graph);
  auto composite = compose(output, slide);
  return {std::move(verdict), std::move(phi), std::move(slide), std::move(output), std::move(composite)};
}

EventuallyPeriodicWord psi_eval(const PsiMachine& machine, const EventuallyPeriodicWord& w) {
  if (w.period.empty()) throw InputError("eventually periodic word needs a non-empty period");
  const PhiTable& phi = machine.phi;
  auto window = [&](std::size_t i) -> const PhiRow& {
    Word x;
    for (std::size_t k = 0; k < phi.m + 2; ++k) x.push_back(w.letter(i + k));
    const PhiRow* r = phi.find(x);
    if (r == nullptr || !r->edge) throw InvalidInput("window " + format_word(*phi.graph, x) + " has no coding path");
    return *r;
  };
  // Windows starting inside the period repeat with it.
  Word prefix;
  append(prefix, window(0).s);
  for (std::size_t i = 0; i < w.prefix.size(); ++i) append(prefix, window(i).l);
  Word period;
  for (std::size_t i = 0; i < w.period.size(); ++i) append(period, window(w.prefix.size() + i).l);
  if (period.empty()) throw StalledOutput("a period of input produced no output");
  auto direct = EventuallyPeriodicWord::make(std::move(prefix), std::move(period));
  auto composed = run(machine.composite, w);
  if (!(direct == composed)) {
    throw InternalError("window recipe " + format_word(*phi.graph, direct) + " disagrees with the transducer " +
                        format_word(*phi.graph, composed));
  }
  return direct;
}

EventuallyPeriodicWord psi_eval(const PairSet& j, const EventuallyPeriodicWord& w) {
  return psi_eval(build_psi_machine(j), w);
}

bool psi_finite_check(const PairSet& j, const Path& alpha_prefix, const Path& beta_prefix) {
  const auto& graph = j.graph();
  auto image = lambda_of_path(j, alpha_prefix);
  return !(AlgebraElement::path_adjoint(graph, beta_prefix) * image).is_zero();
}

}  // namespace graphalg
