#include "cocoa/obligation.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <unordered_map>

#include "cocoa/hashing.hpp"
#include "cocoa/scc.hpp"

namespace cocoa {

namespace {

StateSet set_union(const StateSet& a, const StateSet& b) {
  StateSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

struct VertexHash {
  std::size_t operator()(const ObligationVertex& v) const noexcept {
    std::size_t seed = VectorHash{}(v.states);
    hash_combine(seed, VectorHash{}(v.obligations));
    return seed;
  }
};

/// Breakpoint successor computation with memoized minimal models per (state, letter).
class Expander {
public:
  explicit Expander(const Awa& a) : a_(a), models_(a.size() * a.alphabet().size()) {}

  const std::vector<StateSet>& models(StateId q, std::size_t x) {
    auto& slot = models_[q * a_.alphabet().size() + x];
    if (!slot) slot = a_.delta(q, x).minimal_models();
    return *slot;
  }

  std::vector<ObligationVertex> successors(const ObligationVertex& v, std::size_t x) {
    // Pairs (S', union of the models chosen for obligation states).
    using Partial = std::pair<StateSet, StateSet>;
    std::set<Partial> partial{{{}, {}}};
    auto extend = [&](StateId q, bool owes) {
      std::set<Partial> next;
      for (const auto& [s, o] : partial) {
        for (const auto& m : models(q, x)) {
          next.emplace(set_union(s, m), owes ? set_union(o, m) : o);
        }
      }
      partial = std::move(next);
    };
    for (StateId q : v.obligations) extend(q, true);
    for (StateId q : v.states) {
      if (!std::binary_search(v.obligations.begin(), v.obligations.end(), q)) extend(q, false);
    }
    std::vector<ObligationVertex> out;
    out.reserve(partial.size());
    for (const auto& [s, o] : partial) {
      const StateSet& pending = v.breakpoint() ? s : o;
      StateSet owe;
      for (StateId q : pending) {
        if (!a_.accepting(q)) owe.push_back(q);
      }
      out.push_back({s, std::move(owe)});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  ObligationVertex initial() const {
    ObligationVertex v{{a_.initial()}, {}};
    if (!a_.accepting(a_.initial())) v.obligations.push_back(a_.initial());
    return v;
  }

private:
  const Awa& a_;
  std::vector<std::optional<std::vector<StateSet>>> models_;
};

}  // namespace

std::vector<ObligationVertex> breakpoint_successors(const Awa& a, const ObligationVertex& v,
                                                    std::size_t letter_index) {
  return Expander(a).successors(v, letter_index);
}

VertexSet ObligationGraph::post(const VertexSet& from, std::size_t letter_index) const {
  VertexSet out;
  for (VertexId v : from) {
    const auto& s = successors(v, letter_index);
    out.insert(out.end(), s.begin(), s.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ObligationGraph miyano_hayashi(const Awa& a, const Budget& budget) {
  ObligationGraph g;
  g.alphabet_ = a.alphabet();
  Expander expander(a);
  std::unordered_map<ObligationVertex, VertexId, VertexHash> index;
  auto intern = [&](ObligationVertex v) {
    auto [it, inserted] = index.try_emplace(v, static_cast<VertexId>(g.vertices_.size()));
    if (inserted) {
      g.vertices_.push_back(std::move(v));
      budget.check(g.vertices_.size(), "obligation graph");
    }
    return it->second;
  };
  intern(expander.initial());
  for (VertexId v = 0; v < g.vertices_.size(); ++v) {
    std::vector<VertexSet> row(a.alphabet().size());
    for (std::size_t x = 0; x < a.alphabet().size(); ++x) {
      // Copy: intern() may reallocate vertices_.
      const ObligationVertex source = g.vertices_[v];
      for (auto& succ : expander.successors(source, x)) row[x].push_back(intern(std::move(succ)));
      std::sort(row[x].begin(), row[x].end());
    }
    g.succ_.push_back(std::move(row));
  }
  return g;
}

bool nbw_accepts_lasso(const ObligationGraph& g, const LassoWord& w) {
  w.validate(g.alphabet());
  const std::size_t positions = w.length();
  std::vector<std::size_t> letter_idx(positions);
  for (std::size_t i = 0; i < positions; ++i) letter_idx[i] = g.alphabet().require_index(w.at(i));

  std::unordered_map<std::uint64_t, std::uint32_t> ids;
  std::vector<std::pair<VertexId, std::size_t>> nodes;
  Adjacency adj;
  auto intern = [&](VertexId v, std::size_t pos) {
    const std::uint64_t key = static_cast<std::uint64_t>(v) * positions + pos;
    auto [it, inserted] = ids.try_emplace(key, static_cast<std::uint32_t>(nodes.size()));
    if (inserted) {
      nodes.emplace_back(v, pos);
      adj.emplace_back();
    }
    return it->second;
  };
  intern(g.initial(), 0);
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    auto [v, pos] = nodes[n];
    for (VertexId t : g.successors(v, letter_idx[pos])) {
      const auto to = intern(t, w.next(pos));
      adj[n].push_back(to);
    }
  }
  const auto scc = tarjan_scc(adj);
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    if (scc.nontrivial[scc.component[n]] && g.accepting(nodes[n].first)) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Emptiness of alternating automata

namespace {

/// Explores the breakpoint graph of `a` on the fly, dropping the accepting sink from
/// state sets and pruning vertices that contain the rejecting sink.  Returns an
/// accepted lasso, if any.
std::optional<LassoWord> search_accepted_lasso(const Awa& a, const Budget& budget) {
  Expander expander(a);
  std::vector<ObligationVertex> vertices;
  std::unordered_map<ObligationVertex, VertexId, VertexHash> index;
  // Edges carry the letter index so a witness can be read off.
  std::vector<std::vector<std::pair<VertexId, std::size_t>>> edges;

  auto simplify = [&](ObligationVertex v) -> std::optional<ObligationVertex> {
    if (std::binary_search(v.states.begin(), v.states.end(), a.bottom())) return std::nullopt;
    auto drop_top = [&](StateSet& s) {
      auto it = std::lower_bound(s.begin(), s.end(), a.top());
      if (it != s.end() && *it == a.top()) s.erase(it);
    };
    drop_top(v.states);
    drop_top(v.obligations);
    return v;
  };
  auto intern = [&](ObligationVertex v) {
    auto [it, inserted] = index.try_emplace(v, static_cast<VertexId>(vertices.size()));
    if (inserted) {
      vertices.push_back(std::move(v));
      edges.emplace_back();
      budget.check(vertices.size(), "emptiness check");
    }
    return it->second;
  };

  auto init = simplify(expander.initial());
  if (!init) return std::nullopt;
  intern(*init);
  for (VertexId v = 0; v < vertices.size(); ++v) {
    for (std::size_t x = 0; x < a.alphabet().size(); ++x) {
      const ObligationVertex source = vertices[v];
      if (source.states.empty()) {
        // Only the accepting sink is left: every continuation is accepted.
        edges[v].emplace_back(v, x);
        continue;
      }
      for (auto& succ : expander.successors(source, x)) {
        auto s = simplify(std::move(succ));
        if (!s) continue;
        const auto to = intern(std::move(*s));
        edges[v].emplace_back(to, x);
      }
    }
  }

  Adjacency adj(vertices.size());
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    for (auto [to, x] : edges[v]) adj[v].push_back(to);
  }
  const auto scc = tarjan_scc(adj);
  std::optional<VertexId> target;
  for (VertexId v = 0; v < vertices.size(); ++v) {
    if (vertices[v].breakpoint() && scc.nontrivial[scc.component[v]]) {
      target = v;
      break;
    }
  }
  if (!target) return std::nullopt;

  // Breadth-first paths: initial -> target, then target -> target inside its SCC.
  auto bfs = [&](VertexId from, VertexId to, bool same_scc, bool need_step) {
    std::vector<std::optional<std::pair<VertexId, std::size_t>>> parent(vertices.size());
    std::vector<bool> seen(vertices.size(), false);
    std::vector<VertexId> queue{from};
    seen[from] = !need_step;
    std::vector<Letter> path;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId v = queue[head];
      for (auto [w, x] : edges[v]) {
        if (same_scc && scc.component[w] != scc.component[to]) continue;
        if (seen[w]) continue;
        seen[w] = true;
        parent[w] = {v, x};
        if (w == to) {
          for (VertexId cur = to;;) {
            auto [p, letter] = *parent[cur];
            path.push_back(a.alphabet().letter(letter));
            cur = p;
            if (cur == from && (path.size() > 0)) break;
          }
          std::reverse(path.begin(), path.end());
          return path;
        }
        queue.push_back(w);
      }
    }
    return path;
  };
  LassoWord word;
  if (*target != 0) word.prefix = bfs(0, *target, false, false);
  word.period = bfs(*target, *target, true, true);
  if (word.period.empty()) throw InternalError("accepting cycle without a path");
  return word;
}

}  // namespace

bool is_empty(const Awa& a, const Budget& budget) { return !search_accepted_lasso(a, budget); }

std::optional<LassoWord> emptiness_witness(const Awa& a, const Budget& budget) {
  return search_accepted_lasso(a, budget);
}

}  // namespace cocoa
