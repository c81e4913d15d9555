#include "cocoa/sltm.hpp"

#include <algorithm>
#include <unordered_map>

#include "cocoa/hashing.hpp"
#include "cocoa/scc.hpp"

namespace cocoa {

Label Label::from_unions(std::vector<StateSet> unions) {
  for (const auto& u : unions) {
    if (u.empty()) throw InvalidParameter("label union must not be empty");
  }
  return Label{minimize_clauses(std::move(unions))};
}

std::string Label::to_string() const {
  if (unions.empty()) return "all";
  std::string out;
  for (std::size_t i = 0; i < unions.size(); ++i) {
    if (i) out += " & ";
    out += "(";
    for (std::size_t j = 0; j < unions[i].size(); ++j) {
      if (j) out += " | ";
      out += std::to_string(unions[i][j]);
    }
    out += ")";
  }
  return out;
}

Label label_of(const ObligationGraph& g, const VertexSet& vertices) {
  std::vector<StateSet> unions;
  unions.reserve(vertices.size());
  for (VertexId v : vertices) unions.push_back(g.vertex(v).states);
  return Label::from_unions(std::move(unions));
}

// ---------------------------------------------------------------------------
// Label equivalence

Awa label_difference_automaton(const Label& l1, const StateSet& c, const Awa& a,
                               const Awa& a_dual) {
  const auto& base = a.alphabet();
  if (base.aps().size() >= kMaxAps) throw InvalidParameter("no room for the fresh letter");
  std::vector<std::string> aps = base.aps();
  aps.push_back("#fresh");
  const Letter eps = Letter{1} << base.aps().size();
  std::vector<Letter> letters = base.letters();
  letters.push_back(eps);
  const std::size_t eps_index = letters.size() - 1;

  AwaBuilder b(Alphabet(std::move(aps), std::move(letters)));
  const StateId n = static_cast<StateId>(a.size());
  const StateId offset = 2;  // builder sinks
  auto pos_id = [&](StateId q) { return offset + q; };
  auto neg_id = [&](StateId q) { return offset + n + q; };
  for (StateId q = 0; q < n; ++q) b.add_state(a.name(q), a.accepting(q));
  for (StateId q = 0; q < n; ++q) b.add_state("~" + a_dual.name(q), a_dual.accepting(q));
  const StateId iota = b.add_state("iota", false);

  auto shift = [](const Pcnf& phi, auto id) {
    std::vector<Clause> out;
    for (const auto& clause : phi.clauses()) {
      Clause c2;
      for (StateId q : clause) c2.push_back(id(q));
      out.push_back(std::move(c2));
    }
    return Pcnf(std::move(out));
  };
  for (StateId q = 0; q < n; ++q) {
    for (std::size_t x = 0; x < base.size(); ++x) {
      b.set_transition(pos_id(q), x, shift(a.delta(q, x), pos_id));
      b.set_transition(neg_id(q), x, shift(a_dual.delta(q, x), neg_id));
    }
    b.set_transition(pos_id(q), eps_index, Pcnf::single(b.bottom()));
    b.set_transition(neg_id(q), eps_index, Pcnf::single(b.bottom()));
  }
  std::vector<Clause> start;
  for (const auto& u : l1.unions) {
    Clause clause;
    for (StateId q : u) clause.push_back(pos_id(q));
    start.push_back(std::move(clause));
  }
  for (StateId q : c) start.push_back({neg_id(q)});
  for (std::size_t x = 0; x < base.size(); ++x) b.set_transition(iota, x, Pcnf::single(b.bottom()));
  b.set_transition(iota, eps_index, Pcnf(std::move(start)));
  b.set_initial(iota);
  return b.build();
}

LabelOracle::LabelOracle(const Awa& a, const Awa& a_dual, Budget budget)
  : a_(a), dual_(a_dual), budget_(budget) {
  if (a.size() != a_dual.size() || !(a.alphabet() == a_dual.alphabet())) {
    throw IncompatibleAutomata("automaton and its dual differ in shape");
  }
}

void LabelOracle::check_states(const Label& l) const {
  for (const auto& u : l.unions) {
    for (StateId q : u) {
      if (q >= a_.size()) throw IncompatibleAutomata("label mentions unknown state");
    }
  }
}

bool LabelOracle::union_covers(const Label& l1, const StateSet& c) {
  // Syntactic shortcut: some union of l1 is contained in c.
  for (const auto& u : l1.unions) {
    if (std::includes(c.begin(), c.end(), u.begin(), u.end())) return true;
  }
  auto key = std::make_pair(l1, c);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  ++checks_;
  budget_.check_time("label equivalence");
  const bool covered = is_empty(label_difference_automaton(l1, c, a_, dual_), budget_);
  cache_.emplace(std::move(key), covered);
  return covered;
}

bool LabelOracle::includes(const Label& l1, const Label& l2) {
  check_states(l1);
  check_states(l2);
  return std::all_of(l2.unions.begin(), l2.unions.end(),
                     [&](const StateSet& c) { return union_covers(l1, c); });
}

bool LabelOracle::equivalent(const Label& l1, const Label& l2) {
  if (l1 == l2) {
    check_states(l1);
    return true;
  }
  return includes(l1, l2) && includes(l2, l1);
}

bool labels_equivalent(const Label& l1, const Label& l2, const Awa& a, const Awa& a_dual) {
  return LabelOracle(a, a_dual).equivalent(l1, l2);
}

// ---------------------------------------------------------------------------
// Construction

namespace {

/// Pairs (v, ṽ) of the two obligation graphs whose languages intersect, found as the
/// generalized Büchi nonemptiness of their synchronous product.  A naive state (N, P)
/// has suffix language ⋃_{v∈P} L(G_v), whose complement is ⋃_{ṽ∈N} L(G̃_ṽ), so
/// inclusion between two states is the absence of a jointly nonempty pair.
class JointNonemptiness {
public:
  JointNonemptiness(const ObligationGraph& pos, const ObligationGraph& neg, const Budget& budget)
    : width_(neg.size()), joint_(pos.size() * neg.size(), false) {
    const std::size_t nodes = joint_.size();
    budget.check(nodes, "obligation graph product");
    const std::size_t sigma = pos.alphabet().size();
    Adjacency adj(nodes);
    for (VertexId v = 0; v < pos.size(); ++v) {
      for (VertexId w = 0; w < neg.size(); ++w) {
        auto& out = adj[v * width_ + w];
        for (std::size_t x = 0; x < sigma; ++x) {
          for (VertexId v2 : pos.successors(v, x)) {
            for (VertexId w2 : neg.successors(w, x)) out.push_back(static_cast<std::uint32_t>(v2 * width_ + w2));
          }
        }
      }
      budget.check_time("obligation graph product");
    }
    const auto scc = tarjan_scc(adj);
    std::vector<bool> acc_pos(scc.count, false), acc_neg(scc.count, false);
    std::vector<std::vector<std::uint32_t>> members(scc.count);
    for (std::size_t n = 0; n < nodes; ++n) {
      const auto c = scc.component[n];
      members[c].push_back(static_cast<std::uint32_t>(n));
      if (pos.accepting(static_cast<VertexId>(n / width_))) acc_pos[c] = true;
      if (neg.accepting(static_cast<VertexId>(n % width_))) acc_neg[c] = true;
    }
    // Components are numbered so that edges never lead to a larger index.
    std::vector<bool> good(scc.count, false);
    for (std::uint32_t c = 0; c < scc.count; ++c) {
      bool g = scc.nontrivial[c] && acc_pos[c] && acc_neg[c];
      for (std::size_t i = 0; !g && i < members[c].size(); ++i) {
        for (auto t : adj[members[c][i]]) {
          if (good[scc.component[t]]) {
            g = true;
            break;
          }
        }
      }
      good[c] = g;
      if (g) {
        for (auto n : members[c]) joint_[n] = true;
      }
    }
  }

  /// The suffix language of `pos_set` is contained in the one whose complement is given
  /// by `neg_set`.
  bool included(const VertexSet& pos_set, const VertexSet& neg_set) const {
    for (VertexId v : pos_set) {
      for (VertexId w : neg_set) {
        if (joint_[v * width_ + w]) return false;
      }
    }
    return true;
  }

private:
  std::size_t width_;
  std::vector<bool> joint_;
};

}  // namespace

Sltm build_canonical_sltm(const Awa& a, const Budget& budget) {
  Sltm m;
  m.awa_ = std::make_shared<const Awa>(a);
  m.dual_ = std::make_shared<const Awa>(dualize(a));
  m.g_neg_ = std::make_shared<const ObligationGraph>(miyano_hayashi(*m.dual_, budget));
  m.g_pos_ = std::make_shared<const ObligationGraph>(miyano_hayashi(a, budget));
  const auto& g_neg = *m.g_neg_;
  const auto& g_pos = *m.g_pos_;
  const std::size_t sigma = a.alphabet().size();
  const JointNonemptiness joint(g_pos, g_neg, budget);

  // Naive states, discovered breadth first.
  using Naive = std::pair<VertexSet, VertexSet>;
  std::vector<Naive> naive;
  std::unordered_map<Naive, std::uint32_t, PairOfVectorsHash> naive_index;
  std::vector<SltmStateId> klass;             // naive state -> class
  std::vector<std::uint32_t> representative;  // class -> first naive member

  auto classify = [&](const Naive& s) -> SltmStateId {
    for (SltmStateId c = 0; c < representative.size(); ++c) {
      const Naive& r = naive[representative[c]];
      if (joint.included(s.second, r.first) && joint.included(r.second, s.first)) return c;
    }
    const auto c = static_cast<SltmStateId>(representative.size());
    representative.push_back(static_cast<std::uint32_t>(naive.size()));
    return c;
  };
  auto intern = [&](Naive s) {
    auto [it, inserted] = naive_index.try_emplace(s, static_cast<std::uint32_t>(naive.size()));
    if (inserted) {
      const auto c = classify(s);
      naive.push_back(std::move(s));
      klass.push_back(c);
      budget.check(naive.size(), "naive suffix-language machine");
    }
    return it->second;
  };

  intern({{g_neg.initial()}, {g_pos.initial()}});
  std::vector<std::vector<std::uint32_t>> naive_succ;
  for (std::uint32_t s = 0; s < naive.size(); ++s) {
    std::vector<std::uint32_t> row(sigma);
    for (std::size_t x = 0; x < sigma; ++x) {
      Naive next{g_neg.post(naive[s].first, x), g_pos.post(naive[s].second, x)};
      row[x] = intern(std::move(next));
    }
    naive_succ.push_back(std::move(row));
  }

  const std::size_t k = representative.size();
  m.naive_size_ = naive.size();
  m.delta_.assign(k, std::vector<SltmStateId>(sigma));
  m.neg_.assign(k, {});
  m.pos_.assign(k, {});
  for (SltmStateId c = 0; c < k; ++c) {
    for (std::size_t x = 0; x < sigma; ++x) m.delta_[c][x] = klass[naive_succ[representative[c]][x]];
  }
  for (std::uint32_t s = 0; s < naive.size(); ++s) {
    const auto c = klass[s];
    for (std::size_t x = 0; x < sigma; ++x) {
      if (klass[naive_succ[s][x]] != m.delta_[c][x]) {
        throw InternalError("suffix-language classes are not closed under successors");
      }
    }
    auto& neg = m.neg_[c];
    neg.insert(neg.end(), naive[s].first.begin(), naive[s].first.end());
    auto& pos = m.pos_[c];
    pos.insert(pos.end(), naive[s].second.begin(), naive[s].second.end());
  }
  for (SltmStateId c = 0; c < k; ++c) {
    for (auto* set : {&m.neg_[c], &m.pos_[c]}) {
      std::sort(set->begin(), set->end());
      set->erase(std::unique(set->begin(), set->end()), set->end());
    }
    m.labels_.push_back(label_of(g_neg, m.neg_[c]));
  }
  return m;
}

SltmStateId sltm_state_after(const Sltm& m, const std::vector<Letter>& prefix) {
  SltmStateId q = m.initial();
  for (Letter x : prefix) q = m.successor(q, m.alphabet().require_index(x));
  return q;
}

}  // namespace cocoa
