#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "cocoa/scc.hpp"

namespace cocoa::testing {

const std::vector<Fixture>& golden_fixtures() {
  static const std::vector<Fixture> fixtures = {
      {"G a", {"F !a"}},
      {"FG a", {"true", "FG a"}},
      // Level 2 could be read as FG !a & FG !b or as GF a & FG !b.  Max-even parity
      // decides: a word with FG !a & FG !b satisfies the formula and lies in level 1, so
      // its color must be 2.  The first reading is pinned.
      {"GF a -> GF b", {"FG !b", "FG !a & FG !b"}},
      {"GF a -> (GF b & FG c)",
       {"true", "FG !a | FG c", "FG c & FG !b", "FG c & FG !b & FG !a"}},
  };
  return fixtures;
}

Parsed parse(const std::string& text) { return parse(text, collect_atoms(text)); }

Parsed parse(const std::string& text, const std::vector<std::string>& aps) {
  return {parse_ltl(text, aps), Alphabet(aps)};
}

namespace {

Formula random_node(std::mt19937_64& rng, std::size_t budget, const std::vector<std::string>& aps) {
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  auto literal = [&] {
    const std::size_t i = pick(aps.size());
    return pick(2) ? Formula::atom(i, aps[i]) : Formula::not_atom(i, aps[i]);
  };
  if (budget <= 1) return pick(8) == 0 ? (pick(2) ? Formula::tt() : Formula::ff()) : literal();
  // Unary needs 2 nodes, binary 3.
  const std::size_t choice = pick(budget >= 3 ? 8 : 4);
  switch (choice) {
    case 0: return Formula::next(random_node(rng, budget - 1, aps));
    case 1: return Formula::globally(random_node(rng, budget - 1, aps));
    case 2: return Formula::finally(random_node(rng, budget - 1, aps));
    case 3: return literal();
    default: {
      const std::size_t left = 1 + pick(budget - 2);
      auto l = random_node(rng, left, aps);
      auto r = random_node(rng, budget - 1 - left, aps);
      switch (choice) {
        case 4: return Formula::conj(l, r);
        case 5: return Formula::disj(l, r);
        case 6: return Formula::until(l, r);
        default: return Formula::release(l, r);
      }
    }
  }
}

}  // namespace

Formula random_nnf(std::mt19937_64& rng, std::size_t max_size, const std::vector<std::string>& aps) {
  const std::size_t size = std::uniform_int_distribution<std::size_t>(1, max_size)(rng);
  return to_nnf(random_node(rng, size, aps));
}

std::vector<Formula> random_corpus(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Formula> out;
  std::set<std::string> seen;
  const std::vector<std::string> aps{"a", "b"};
  while (out.size() < count) {
    Formula f = random_nnf(rng, 6, aps);
    if (f.size() <= 6 && seen.insert(f.to_string()).second) out.push_back(f);
  }
  return out;
}

ReferenceAwa reference_awa() {
  const Alphabet al({"a", "b"});
  AwaBuilder b(al);
  ReferenceAwa ref{Awa{}, 0, 0, 0, 0, 0, 0, 0};
  ref.iota = b.add_state("iota0", false);
  ref.f0 = b.add_state("f0", false);
  ref.f1 = b.add_state("f1", true);
  ref.f2 = b.add_state("f2", false);
  ref.g0 = b.add_state("g0", true);
  ref.g1 = b.add_state("g1", false);
  ref.g2 = b.add_state("g2", true);
  const Letter a = 1, bb = 2;
  const auto& letters = al.letters();
  b.set_transition_all(ref.iota, Pcnf({{ref.f0, ref.g0}}));
  b.set_transition_all(ref.f0, Pcnf({{ref.f0, ref.f1}}));
  b.set_transition_all(ref.f2, Pcnf::single(ref.f2));
  b.set_transition_all(ref.g0, Pcnf({{ref.g0}, {ref.g1}}));
  b.set_transition_all(ref.g2, Pcnf::single(ref.g2));
  for (std::size_t x = 0; x < letters.size(); ++x) {
    b.set_transition(ref.f1, x, Pcnf::single(letters[x] & a ? ref.f1 : ref.f2));
    b.set_transition(ref.g1, x, Pcnf::single(letters[x] & bb ? ref.g2 : ref.g1));
  }
  b.set_initial(ref.iota);
  ref.awa = b.build();
  return ref;
}

bool nfw_accepts_lasso(const Nfw& n, const Sltm& m, const LassoWord& w) {
  // Unroll far enough that (SLTM state, phase) pairs repeat: |u| + |Q_S| * |v| positions
  // before the repeated block.
  const std::size_t horizon = w.prefix.size() + m.size() * w.period.size();
  std::vector<SltmStateId> state{m.initial()};
  for (std::size_t i = 0; i < horizon + w.period.size(); ++i) {
    state.push_back(m.successor(state.back(), m.alphabet().require_index(w.letter_at(i))));
  }
  // Find the lasso over positions 0..end where position end wraps back to `loop`.
  std::size_t loop = 0, end = 0;
  for (std::size_t j = w.prefix.size(); j <= horizon + w.period.size() && !end; ++j) {
    for (std::size_t i = w.prefix.size(); i < j; ++i) {
      if ((j - i) % w.period.size() == 0 && state[i] == state[j]) {
        loop = i;
        end = j;
        break;
      }
    }
  }
  if (!end) throw std::logic_error("no repetition found");
  const std::size_t positions = end;
  auto next_pos = [&](std::size_t p) { return p + 1 < positions ? p + 1 : loop; };
  // Product graph of NFW states and positions with matching labels.
  const std::size_t nodes = n.size() * positions;
  Adjacency adj(nodes);
  for (FloatId q = 0; q < n.size(); ++q) {
    for (std::size_t p = 0; p < positions; ++p) {
      if (n.states[q].label != state[p]) continue;
      const std::size_t x = m.alphabet().require_index(w.letter_at(p));
      for (FloatId t : n.succ[q][x]) adj[q * positions + p].push_back(static_cast<std::uint32_t>(t * positions + next_pos(p)));
    }
  }
  const auto scc = tarjan_scc(adj);
  // A node has an infinite run iff it reaches a nontrivial component.
  std::vector<int> infinite(nodes, -1);
  std::function<bool(std::size_t)> solve = [&](std::size_t v) -> bool {
    if (infinite[v] >= 0) return infinite[v];
    infinite[v] = scc.nontrivial[scc.component[v]] ? 1 : 0;
    if (!infinite[v]) {
      for (auto t : adj[v]) {
        if (solve(t)) {
          infinite[v] = 1;
          break;
        }
      }
    }
    return infinite[v];
  };
  for (FloatId q = 0; q < n.size(); ++q) {
    for (std::size_t p = 0; p < positions; ++p) {
      if (n.states[q].label == state[p] && solve(q * positions + p)) return true;
    }
  }
  return false;
}

std::vector<Stage> staged_levels(const Sltm& m, std::size_t max_levels) {
  std::vector<Stage> out;
  Dfw prev = universal_dfw(m);
  for (std::size_t level = 1; level <= max_levels; ++level) {
    Stage s;
    s.prev_size = prev.size();
    s.nfw = level_product(prev, m, static_cast<int>(level));
    s.determinized = determinize(s.nfw, prev, m, static_cast<int>(level));
    s.minimized = minimize_dfw(s.determinized, m);
    const bool empty = s.minimized.empty();
    prev = s.minimized;
    out.push_back(std::move(s));
    if (empty) break;
  }
  return out;
}

std::vector<std::vector<Letter>> words_up_to(const Alphabet& alphabet, std::size_t n) {
  std::vector<std::vector<Letter>> out{{}};
  for (std::size_t begin = 0, len = 0; len < n; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (Letter x : alphabet.letters()) {
        auto w = out[i];
        w.push_back(x);
        out.push_back(std::move(w));
      }
    }
    begin = end;
  }
  return out;
}

LassoWord concat(const std::vector<Letter>& prefix, const LassoWord& w) {
  LassoWord out{prefix, w.period};
  out.prefix.insert(out.prefix.end(), w.prefix.begin(), w.prefix.end());
  return out;
}

namespace {

template <typename Succ>
bool transient_free_graph(std::size_t n, std::size_t letters, Succ succ) {
  Adjacency adj(n);
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t x = 0; x < letters; ++x) succ(q, x, adj[q]);
  const auto scc = tarjan_scc(adj);
  for (std::size_t q = 0; q < n; ++q) {
    if (!scc.nontrivial[scc.component[q]]) return false;
    for (auto t : adj[q])
      if (scc.component[t] != scc.component[q]) return false;
  }
  return true;
}

VertexSet sorted_union(VertexSet a, const VertexSet& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

}  // namespace

bool transient_free(const Nfw& n, std::size_t letters) {
  return transient_free_graph(n.size(), letters, [&](std::size_t q, std::size_t x, auto& out) {
    out.insert(out.end(), n.succ[q][x].begin(), n.succ[q][x].end());
  });
}

bool transient_free(const Dfw& d, std::size_t letters) {
  return transient_free_graph(d.size(), letters, [&](std::size_t q, std::size_t x, auto& out) {
    if (d.delta[q][x] != kUndefined) out.push_back(d.delta[q][x]);
  });
}

Replay replay_naive(const Sltm& m) {
  const auto& gn = m.graph_neg();
  const auto& gp = m.graph_pos();
  using Node = std::tuple<SltmStateId, VertexSet, VertexSet>;
  std::set<Node> seen;
  std::set<std::pair<VertexSet, VertexSet>> naive;
  std::vector<Node> todo{{m.initial(), {gn.initial()}, {gp.initial()}}};
  Replay r;
  while (!todo.empty()) {
    auto cur = std::move(todo.back());
    todo.pop_back();
    if (!seen.insert(cur).second) continue;
    const auto& [q, n, p] = cur;
    naive.emplace(n, p);
    auto& cov = r.covered[q];
    cov.first = sorted_union(cov.first, n);
    cov.second = sorted_union(cov.second, p);
    for (std::size_t x = 0; x < m.alphabet().size(); ++x) {
      todo.emplace_back(m.successor(q, x), gn.post(n, x), gp.post(p, x));
    }
  }
  r.naive_states = naive.size();
  return r;
}

bool label_holds(const Label& l, const Awa& a, const LassoWord& w) {
  return std::all_of(l.unions.begin(), l.unions.end(), [&](const StateSet& u) {
    return std::any_of(u.begin(), u.end(), [&](StateId q) { return accepts_lasso(a.with_initial(q), w); });
  });
}

}  // namespace cocoa::testing
