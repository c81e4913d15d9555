#include "cocoa/floating.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "cocoa/hashing.hpp"
#include "cocoa/scc.hpp"

namespace cocoa {

std::size_t Nfw::transition_count() const {
  std::size_t n = 0;
  for (const auto& row : succ) {
    for (const auto& s : row) n += s.size();
  }
  return n;
}

std::size_t Dfw::transition_count() const {
  std::size_t n = 0;
  for (const auto& row : delta) n += std::count_if(row.begin(), row.end(), [](FloatId t) {
    return t != kUndefined;
  });
  return n;
}

void check_label_consistency(const Dfw& d, const Sltm& m) {
  for (FloatId q = 0; q < d.size(); ++q) {
    for (std::size_t x = 0; x < d.delta[q].size(); ++x) {
      const FloatId t = d.delta[q][x];
      if (t != kUndefined && d.states[t].label != m.successor(d.states[q].label, x)) {
        throw InternalError("DFW transition disagrees with the SLTM");
      }
    }
  }
}

void check_label_consistency(const Nfw& n, const Sltm& m) {
  for (FloatId q = 0; q < n.size(); ++q) {
    for (std::size_t x = 0; x < n.succ[q].size(); ++x) {
      for (FloatId t : n.succ[q][x]) {
        if (n.states[t].label != m.successor(n.states[q].label, x)) {
          throw InternalError("NFW transition disagrees with the SLTM");
        }
      }
    }
  }
}

double fl_size_bound_log2(std::size_t prev_states, std::size_t graph_vertices) {
  return 2.0 * std::log2(static_cast<double>(std::max<std::size_t>(prev_states, 1))) +
         static_cast<double>(graph_vertices) +
         std::log2(static_cast<double>(std::max<std::size_t>(graph_vertices, 1)));
}

namespace {

/// Keeps the states on cycles and the transitions inside one SCC, renumbering in id order.
Dfw strip_transient(const Dfw& d) {
  Adjacency adj(d.size());
  for (FloatId q = 0; q < d.size(); ++q) {
    for (FloatId t : d.delta[q]) {
      if (t != kUndefined) adj[q].push_back(t);
    }
  }
  const auto scc = tarjan_scc(adj);
  std::vector<FloatId> renumber(d.size(), kUndefined);
  Dfw out;
  for (FloatId q = 0; q < d.size(); ++q) {
    if (!scc.nontrivial[scc.component[q]]) continue;
    renumber[q] = static_cast<FloatId>(out.states.size());
    out.states.push_back(d.states[q]);
  }
  out.delta.assign(out.size(), {});
  for (FloatId q = 0; q < d.size(); ++q) {
    if (renumber[q] == kUndefined) continue;
    auto& row = out.delta[renumber[q]];
    for (FloatId t : d.delta[q]) {
      const bool inside = t != kUndefined && scc.component[t] == scc.component[q];
      row.push_back(inside ? renumber[t] : kUndefined);
    }
  }
  return out;
}

/// Coarsest partition compatible with labels and the partial transition function.
std::vector<std::uint32_t> moore_partition(const Dfw& d) {
  std::vector<std::uint32_t> block(d.size());
  {
    std::map<SltmStateId, std::uint32_t> ids;
    for (FloatId q = 0; q < d.size(); ++q) {
      block[q] = ids.try_emplace(d.states[q].label, static_cast<std::uint32_t>(ids.size()))
                     .first->second;
    }
  }
  std::size_t count = 0;
  while (true) {
    std::map<std::vector<std::int64_t>, std::uint32_t> ids;
    std::vector<std::uint32_t> next(d.size());
    for (FloatId q = 0; q < d.size(); ++q) {
      std::vector<std::int64_t> sig{block[q]};
      for (FloatId t : d.delta[q]) sig.push_back(t == kUndefined ? -1 : block[t]);
      next[q] = ids.try_emplace(std::move(sig), static_cast<std::uint32_t>(ids.size()))
                    .first->second;
    }
    if (ids.size() == count) return block;
    count = ids.size();
    block = std::move(next);
  }
}

Dfw quotient(const Dfw& d, const std::vector<std::uint32_t>& block) {
  // Blocks renumbered by their smallest member, which also supplies the payload.
  std::vector<FloatId> renumber(d.size(), kUndefined);
  std::map<std::uint32_t, FloatId> first;
  Dfw out;
  std::vector<FloatId> rep;
  for (FloatId q = 0; q < d.size(); ++q) {
    auto [it, inserted] = first.try_emplace(block[q], static_cast<FloatId>(out.states.size()));
    if (inserted) {
      out.states.push_back(d.states[q]);
      rep.push_back(q);
    }
    renumber[q] = it->second;
  }
  out.delta.assign(out.size(), {});
  for (FloatId c = 0; c < out.size(); ++c) {
    for (FloatId t : d.delta[rep[c]]) out.delta[c].push_back(t == kUndefined ? kUndefined : renumber[t]);
  }
  return out;
}

}  // namespace

Dfw minimize_dfw(const Dfw& d, const Sltm& m) {
  Dfw current = strip_transient(d);
  while (true) {
    Dfw next = strip_transient(quotient(current, moore_partition(current)));
    if (next.size() == current.size() && next.transition_count() == current.transition_count()) {
      check_label_consistency(next, m);
      return next;
    }
    current = std::move(next);
  }
}

Dfw universal_dfw(const Sltm& m) {
  Dfw d;
  for (SltmStateId q = 0; q < m.size(); ++q) {
    d.states.push_back({q, kUndefined, {}});
    d.delta.emplace_back(m.transitions()[q].begin(), m.transitions()[q].end());
  }
  return minimize_dfw(d, m);
}

Nfw level_product(const Dfw& prev, const Sltm& m, int level, const Budget& budget) {
  if (level < 1) throw InvalidParameter("level must be positive");
  const bool odd = level % 2 == 1;
  const ObligationGraph& g = odd ? m.graph_neg() : m.graph_pos();
  auto vertex_set = [&](SltmStateId s) -> const VertexSet& {
    return odd ? m.vertex_set_neg(s) : m.vertex_set_pos(s);
  };
  const std::size_t sigma = m.alphabet().size();

  // Unabridged product over all pairs (p, v) with v in the labeling of f(p).
  std::vector<NfwState> states;
  std::map<std::pair<FloatId, VertexId>, FloatId> index;
  for (FloatId p = 0; p < prev.size(); ++p) {
    for (VertexId v : vertex_set(prev.states[p].label)) {
      index.emplace(std::make_pair(p, v), static_cast<FloatId>(states.size()));
      states.push_back({prev.states[p].label, p, v});
      budget.check(states.size(), "level product");
    }
  }
  std::vector<std::vector<std::vector<FloatId>>> succ(states.size(),
                                                      std::vector<std::vector<FloatId>>(sigma));
  Adjacency adj(states.size());
  for (FloatId q = 0; q < states.size(); ++q) {
    for (std::size_t x = 0; x < sigma; ++x) {
      const FloatId p2 = prev.delta[states[q].pred][x];
      if (p2 == kUndefined) continue;
      for (VertexId v2 : g.successors(states[q].vertex, x)) {
        auto it = index.find({p2, v2});
        if (it == index.end()) throw InternalError("product successor outside the SLTM labeling");
        succ[q][x].push_back(it->second);
        adj[q].push_back(it->second);
      }
    }
  }
  budget.check_time("level product");

  const auto scc = tarjan_scc(adj);
  std::vector<bool> keep_component(scc.count, false);
  for (FloatId q = 0; q < states.size(); ++q) {
    const auto c = scc.component[q];
    if (scc.nontrivial[c] && g.accepting(states[q].vertex)) keep_component[c] = true;
  }
  Nfw n;
  std::vector<FloatId> renumber(states.size(), kUndefined);
  for (FloatId q = 0; q < states.size(); ++q) {
    if (!keep_component[scc.component[q]]) continue;
    renumber[q] = static_cast<FloatId>(n.states.size());
    n.states.push_back(states[q]);
  }
  n.succ.assign(n.size(), std::vector<std::vector<FloatId>>(sigma));
  for (FloatId q = 0; q < states.size(); ++q) {
    if (renumber[q] == kUndefined) continue;
    for (std::size_t x = 0; x < sigma; ++x) {
      for (FloatId t : succ[q][x]) {
        if (scc.component[t] == scc.component[q]) n.succ[renumber[q]][x].push_back(renumber[t]);
      }
      std::sort(n.succ[renumber[q]][x].begin(), n.succ[renumber[q]][x].end());
    }
  }
  check_label_consistency(n, m);
  return n;
}

Dfw determinize(const Nfw& n, const Dfw& prev, const Sltm& m, int level, const Budget& budget) {
  const std::size_t sigma = m.alphabet().size();
  // Subsets of NFW states sharing one predecessor state; identity (pred, vertices).
  using Key = std::pair<FloatId, VertexSet>;
  std::map<Key, FloatId> index;
  std::vector<std::vector<FloatId>> members;
  Dfw d;
  auto intern = [&](std::vector<FloatId> set) {
    const FloatId pred = n.states[set.front()].pred;
    VertexSet vs;
    for (FloatId q : set) {
      if (n.states[q].pred != pred) throw InternalError("subset mixes predecessor states");
      vs.push_back(n.states[q].vertex);
    }
    std::sort(vs.begin(), vs.end());
    auto [it, inserted] = index.try_emplace({pred, vs}, static_cast<FloatId>(d.states.size()));
    if (inserted) {
      d.states.push_back({n.states[set.front()].label, pred, std::move(vs)});
      members.push_back(std::move(set));
      budget.check(d.states.size(), "determinized level");
    }
    return it->second;
  };
  for (FloatId q = 0; q < n.size(); ++q) intern({q});
  for (FloatId s = 0; s < d.states.size(); ++s) {
    std::vector<FloatId> row(sigma, kUndefined);
    for (std::size_t x = 0; x < sigma; ++x) {
      std::vector<FloatId> next;
      for (FloatId q : members[s]) next.insert(next.end(), n.succ[q][x].begin(), n.succ[q][x].end());
      if (next.empty()) continue;
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      row[x] = intern(std::move(next));
    }
    d.delta.push_back(std::move(row));
  }
  const bool odd = level % 2 == 1;
  const std::size_t vertices = odd ? m.graph_neg().size() : m.graph_pos().size();
  if (!d.empty() && std::log2(static_cast<double>(d.size())) >
                        fl_size_bound_log2(prev.size(), vertices) + 1e-9) {
    throw InternalError("determinized level exceeds the state bound");
  }
  check_label_consistency(d, m);
  return d;
}

// ---------------------------------------------------------------------------
// Lasso membership

namespace {

/// Lasso equal to w whose folded positions determine the SLTM state.
struct SltmUnrolling {
  LassoWord word;
  std::vector<SltmStateId> state;      // SLTM state before reading position i
  std::vector<std::size_t> letter;     // letter index at position i
};

SltmUnrolling unroll(const Sltm& m, const LassoWord& w) {
  w.validate(m.alphabet());
  SltmUnrolling u;
  std::map<std::pair<SltmStateId, std::size_t>, std::size_t> seen;
  SltmStateId s = m.initial();
  std::size_t pos = 0;
  std::vector<Letter> letters;
  while (true) {
    auto [it, inserted] = seen.try_emplace({s, pos}, letters.size());
    if (!inserted) {
      const std::size_t loop = it->second;
      u.word.prefix.assign(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(loop));
      u.word.period.assign(letters.begin() + static_cast<std::ptrdiff_t>(loop), letters.end());
      return u;
    }
    const Letter x = w.at(pos);
    const std::size_t xi = m.alphabet().require_index(x);
    letters.push_back(x);
    u.state.push_back(s);
    u.letter.push_back(xi);
    s = m.successor(s, xi);
    pos = w.next(pos);
  }
}

/// Deterministic product graph over (DFW state, unrolled position) nodes that respect labels.
struct RunGraph {
  std::size_t positions;
  std::vector<FloatId> next;  // node -> node or kUndefined
  std::uint32_t node(FloatId q, std::size_t pos) const {
    return static_cast<std::uint32_t>(q * positions + pos);
  }
};

RunGraph run_graph(const Dfw& d, const SltmUnrolling& u) {
  RunGraph g{u.word.length(), {}};
  g.next.assign(d.size() * g.positions, kUndefined);
  for (FloatId q = 0; q < d.size(); ++q) {
    for (std::size_t pos = 0; pos < g.positions; ++pos) {
      const FloatId t = d.delta[q][u.letter[pos]];
      if (t != kUndefined) g.next[g.node(q, pos)] = g.node(t, u.word.next(pos));
    }
  }
  return g;
}

}  // namespace

bool dfw_accepts_lasso(const Dfw& d, const Sltm& m, const LassoWord& w) {
  const auto u = unroll(m, w);
  if (d.empty()) return false;
  const auto g = run_graph(d, u);
  // 0 unknown, 1 on the current path, 2 infinite run, 3 run dies.
  std::vector<std::uint8_t> status(g.next.size(), 0);
  for (FloatId q = 0; q < d.size(); ++q) {
    for (std::size_t pos = 0; pos < g.positions; ++pos) {
      if (d.states[q].label != u.state[pos]) continue;
      std::vector<std::uint32_t> path;
      std::uint32_t cur = g.node(q, pos);
      std::uint8_t verdict;
      while (true) {
        if (status[cur] == 1) { verdict = 2; break; }
        if (status[cur] >= 2) { verdict = status[cur]; break; }
        status[cur] = 1;
        path.push_back(cur);
        if (g.next[cur] == kUndefined) { verdict = 3; break; }
        cur = g.next[cur];
      }
      for (auto node : path) status[node] = verdict;
      if (verdict == 2) return true;
    }
  }
  return false;
}

std::set<std::tuple<FloatId, std::size_t, FloatId>> jump_in_transitions(
    const Dfw& d, const Sltm& m, const std::vector<Letter>& prefix, const LassoWord& w) {
  LassoWord full{prefix, w.period};
  full.prefix.insert(full.prefix.end(), w.prefix.begin(), w.prefix.end());
  const auto u = unroll(m, full);
  std::set<std::tuple<FloatId, std::size_t, FloatId>> out;
  if (d.empty()) return out;
  const auto g = run_graph(d, u);
  std::vector<bool> seen(g.next.size(), false);
  for (FloatId q = 0; q < d.size(); ++q) {
    // The unrolled prefix covers the given prefix; every later position is visited after it.
    for (std::size_t pos = prefix.size(); pos < g.positions; ++pos) {
      if (d.states[q].label != u.state[pos]) continue;
      for (std::uint32_t cur = g.node(q, pos); !seen[cur];) {
        seen[cur] = true;
        const FloatId from = static_cast<FloatId>(cur / g.positions);
        const std::size_t at = cur % g.positions;
        const FloatId to = d.delta[from][u.letter[at]];
        if (to == kUndefined) break;
        out.emplace(from, u.letter[at], to);
        cur = g.next[cur];
      }
    }
  }
  return out;
}

}  // namespace cocoa
