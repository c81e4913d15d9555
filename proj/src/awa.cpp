#include "cocoa/awa.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "cocoa/game.hpp"
#include "cocoa/scc.hpp"

namespace cocoa {

// ---------------------------------------------------------------------------
// Clause sets

std::vector<Clause> minimize_clauses(std::vector<Clause> clauses) {
  for (auto& c : clauses) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
  std::sort(clauses.begin(), clauses.end(), [](const Clause& a, const Clause& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());
  std::vector<Clause> kept;
  for (auto& c : clauses) {
    bool subsumed = std::any_of(kept.begin(), kept.end(), [&](const Clause& k) {
      return std::includes(c.begin(), c.end(), k.begin(), k.end());
    });
    if (!subsumed) kept.push_back(std::move(c));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

Pcnf::Pcnf(std::vector<Clause> clauses) : clauses_(minimize_clauses(std::move(clauses))) {
  if (clauses_.empty()) throw InvalidParameter("PCNF formula needs at least one clause");
  if (clauses_.front().empty()) throw InvalidParameter("PCNF clause must not be empty");
}

StateSet Pcnf::atoms() const {
  StateSet out;
  for (const auto& c : clauses_) out.insert(out.end(), c.begin(), c.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Pcnf::satisfied_by(const StateSet& model) const {
  return std::all_of(clauses_.begin(), clauses_.end(), [&](const Clause& c) {
    return std::any_of(c.begin(), c.end(),
                       [&](StateId q) { return std::binary_search(model.begin(), model.end(), q); });
  });
}

namespace {

void hitting_sets(const std::vector<Clause>& clauses, std::size_t from, StateSet& current,
                  std::vector<StateSet>& out) {
  std::size_t i = from;
  while (i < clauses.size()) {
    const auto& c = clauses[i];
    bool hit = std::any_of(c.begin(), c.end(), [&](StateId q) {
      return std::binary_search(current.begin(), current.end(), q);
    });
    if (!hit) break;
    ++i;
  }
  if (i == clauses.size()) {
    out.push_back(current);
    return;
  }
  for (StateId q : clauses[i]) {
    auto pos = std::lower_bound(current.begin(), current.end(), q);
    current.insert(pos, q);
    hitting_sets(clauses, i + 1, current, out);
    current.erase(std::lower_bound(current.begin(), current.end(), q));
  }
}

}  // namespace

std::vector<StateSet> Pcnf::minimal_models() const {
  std::vector<StateSet> found;
  StateSet current;
  hitting_sets(clauses_, 0, current, found);
  // Minimal hitting sets are exactly the clauses of the minimized family.
  return minimize_clauses(std::move(found));
}

Pcnf Pcnf::dual() const { return Pcnf(minimal_models()); }

std::string Pcnf::to_string(const std::vector<std::string>& names) const {
  std::string out;
  for (std::size_t i = 0; i < clauses_.size(); ++i) {
    if (i) out += " & ";
    out += "(";
    for (std::size_t j = 0; j < clauses_[i].size(); ++j) {
      if (j) out += " | ";
      StateId q = clauses_[i][j];
      out += q < names.size() ? names[q] : std::to_string(q);
    }
    out += ")";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Construction

Awa Awa::with_initial(StateId q) const {
  if (q >= size()) throw InvalidParameter("state out of range");
  Awa copy = *this;
  copy.initial_ = q;
  return copy;
}

AwaBuilder::AwaBuilder(Alphabet alphabet) : alphabet_(std::move(alphabet)) {
  add_state("top", true);
  add_state("bottom", false);
  set_transition_all(top(), Pcnf::single(top()));
  set_transition_all(bottom(), Pcnf::single(bottom()));
}

StateId AwaBuilder::add_state(std::string name, bool accepting) {
  names_.push_back(std::move(name));
  accepting_.push_back(accepting);
  delta_.emplace_back(alphabet_.size());
  return static_cast<StateId>(names_.size() - 1);
}

void AwaBuilder::set_transition(StateId q, std::size_t letter_index, Pcnf formula) {
  if (q >= names_.size()) throw InvalidParameter("state out of range");
  if (letter_index >= alphabet_.size()) throw InvalidParameter("letter out of range");
  for (const auto& c : formula.clauses()) {
    for (StateId t : c) {
      if (t >= names_.size()) throw InvalidParameter("transition mentions unknown state");
    }
  }
  delta_[q][letter_index] = std::move(formula);
}

void AwaBuilder::set_transition_all(StateId q, const Pcnf& formula) {
  for (std::size_t x = 0; x < alphabet_.size(); ++x) set_transition(q, x, formula);
}

Awa AwaBuilder::build() const {
  if (!initial_) throw InvalidParameter("initial state not set");
  Awa a;
  a.alphabet_ = alphabet_;
  a.names_ = names_;
  a.initial_ = *initial_;
  a.top_ = top();
  a.bottom_ = bottom();
  a.accepting_ = accepting_;
  a.delta_.resize(names_.size());
  for (std::size_t q = 0; q < names_.size(); ++q) {
    for (std::size_t x = 0; x < alphabet_.size(); ++x) {
      if (!delta_[q][x]) {
        throw InvalidParameter("transition of state '" + names_[q] + "' on letter " +
                               alphabet_.letter_name(alphabet_.letter(x)) + " is undefined");
      }
      a.delta_[q].push_back(*delta_[q][x]);
    }
  }
  a.rank_ = check_weak(a.delta_, a.accepting_);
  return a;
}

std::vector<unsigned> check_weak(const std::vector<std::vector<Pcnf>>& delta,
                                 const std::vector<bool>& accepting) {
  Adjacency adj(delta.size());
  for (std::size_t q = 0; q < delta.size(); ++q) {
    StateSet succ;
    for (const auto& phi : delta[q]) {
      auto atoms = phi.atoms();
      succ.insert(succ.end(), atoms.begin(), atoms.end());
    }
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
    adj[q] = succ;
  }
  const auto scc = tarjan_scc(adj);
  std::vector<int> verdict(scc.count, -1);
  for (std::size_t q = 0; q < delta.size(); ++q) {
    const int acc = accepting[q] ? 1 : 0;
    int& v = verdict[scc.component[q]];
    if (v < 0) {
      v = acc;
    } else if (v != acc) {
      std::vector<std::uint32_t> members;
      for (std::size_t r = 0; r < delta.size(); ++r) {
        if (scc.component[r] == scc.component[q]) members.push_back(static_cast<std::uint32_t>(r));
      }
      throw NotWeak(std::move(members));
    }
  }
  return {scc.component.begin(), scc.component.end()};
}

// ---------------------------------------------------------------------------
// LTL to AWA

namespace {

/// CNF with constants: no clauses is true, an empty clause is false.
using Cnf = std::vector<Clause>;

Cnf cnf_true() { return {}; }
Cnf cnf_false() { return {Clause{}}; }
Cnf cnf_unit(StateId q) { return {Clause{q}}; }

Cnf cnf_and(const Cnf& l, const Cnf& r) {
  Cnf out = l;
  out.insert(out.end(), r.begin(), r.end());
  return minimize_clauses(std::move(out));
}

Cnf cnf_or(const Cnf& l, const Cnf& r) {
  if (l.empty() || r.empty()) return cnf_true();
  Cnf out;
  for (const auto& a : l) {
    for (const auto& b : r) {
      Clause c = a;
      c.insert(c.end(), b.begin(), b.end());
      out.push_back(std::move(c));
    }
  }
  return minimize_clauses(std::move(out));
}

class LtlTranslator {
public:
  LtlTranslator(const Alphabet& alphabet) : builder_(alphabet), alphabet_(alphabet) {}

  Awa run(const Formula& root) {
    builder_.set_initial(state_for(root));
    while (!pending_.empty()) {
      auto [q, f] = pending_.back();
      pending_.pop_back();
      for (std::size_t x = 0; x < alphabet_.size(); ++x) {
        builder_.set_transition(q, x, to_pcnf(expand(f, q, alphabet_.letter(x))));
      }
    }
    return builder_.build();
  }

private:
  StateId state_for(const Formula& f) {
    auto key = f.to_string();
    auto it = ids_.find(key);
    if (it != ids_.end()) return it->second;
    const bool rejecting = f.op() == Op::Until || f.op() == Op::Finally || f.op() == Op::False;
    StateId q = builder_.add_state(key, !rejecting);
    ids_.emplace(std::move(key), q);
    pending_.emplace_back(q, f);
    return q;
  }

  /// One-step expansion of f; `self` is the state standing for f when f is temporal.
  Cnf expand(const Formula& f, std::optional<StateId> self, Letter letter) {
    auto self_state = [&]() { return self ? *self : state_for(f); };
    switch (f.op()) {
      case Op::True: return cnf_true();
      case Op::False: return cnf_false();
      case Op::Atom: return ((letter >> f.ap()) & 1U) ? cnf_true() : cnf_false();
      case Op::NotAtom: return ((letter >> f.ap()) & 1U) ? cnf_false() : cnf_true();
      case Op::And: return cnf_and(expand(f.child(0), {}, letter), expand(f.child(1), {}, letter));
      case Op::Or: return cnf_or(expand(f.child(0), {}, letter), expand(f.child(1), {}, letter));
      case Op::Next: return cnf_unit(state_for(f.child(0)));
      case Op::Until:
        return cnf_or(expand(f.child(1), {}, letter),
                      cnf_and(expand(f.child(0), {}, letter), cnf_unit(self_state())));
      case Op::Release:
        return cnf_and(expand(f.child(1), {}, letter),
                       cnf_or(expand(f.child(0), {}, letter), cnf_unit(self_state())));
      case Op::Globally: return cnf_and(expand(f.child(0), {}, letter), cnf_unit(self_state()));
      case Op::Finally: return cnf_or(expand(f.child(0), {}, letter), cnf_unit(self_state()));
      case Op::Not:
      case Op::Implies: break;
    }
    throw NotNnf("formula is not in negation normal form");
  }

  Pcnf to_pcnf(const Cnf& cnf) const {
    if (cnf.empty()) return Pcnf::single(builder_.top());
    if (cnf.front().empty()) return Pcnf::single(builder_.bottom());
    return Pcnf(cnf);
  }

  AwaBuilder builder_;
  const Alphabet& alphabet_;
  std::unordered_map<std::string, StateId> ids_;
  std::vector<std::pair<StateId, Formula>> pending_;
};

}  // namespace

Awa from_ltl(const Formula& f, const Alphabet& alphabet) {
  const bool constant_root = f.op() == Op::True || f.op() == Op::False;
  if (!constant_root && !f.is_nnf()) throw NotNnf("formula is not in negation normal form");
  for (const auto& sub : closure(f)) {
    if ((sub.op() == Op::Atom || sub.op() == Op::NotAtom) &&
        (sub.ap() >= alphabet.aps().size() || alphabet.aps()[sub.ap()] != sub.name())) {
      throw InvalidParameter("formula proposition '" + sub.name() + "' does not match the alphabet");
    }
  }
  return LtlTranslator(alphabet).run(f);
}

Awa dualize(const Awa& a) {
  Awa d = a;
  for (auto& row : d.delta_) {
    for (auto& phi : row) phi = phi.dual();
  }
  for (std::size_t q = 0; q < d.accepting_.size(); ++q) d.accepting_[q] = !a.accepting_[q];
  d.top_ = a.bottom_;
  d.bottom_ = a.top_;
  return d;
}

// ---------------------------------------------------------------------------
// Word-checking game

bool accepts_lasso(const Awa& a, const LassoWord& w) {
  w.validate(a.alphabet());
  const std::size_t positions = w.length();
  std::vector<std::size_t> letter_idx(positions);
  for (std::size_t i = 0; i < positions; ++i) letter_idx[i] = a.alphabet().require_index(w.at(i));

  // Rejector nodes (state, position) and acceptor nodes (state, position, clause).
  BuchiArena arena;
  std::map<std::pair<StateId, std::size_t>, std::uint32_t> state_node;
  std::vector<std::pair<StateId, std::size_t>> todo;
  auto node_for = [&](StateId q, std::size_t pos) {
    auto [it, inserted] = state_node.try_emplace({q, pos}, 0);
    if (inserted) {
      it->second = static_cast<std::uint32_t>(arena.successors.size());
      arena.successors.emplace_back();
      arena.owned_by_acceptor.push_back(false);
      arena.target.push_back(a.accepting(q));
      todo.emplace_back(q, pos);
    }
    return it->second;
  };
  const auto root = node_for(a.initial(), 0);
  while (!todo.empty()) {
    auto [q, pos] = todo.back();
    todo.pop_back();
    const auto from = state_node.at({q, pos});
    const auto next = w.next(pos);
    for (const auto& clause : a.delta(q, letter_idx[pos]).clauses()) {
      const auto choice = static_cast<std::uint32_t>(arena.successors.size());
      arena.successors.emplace_back();
      arena.owned_by_acceptor.push_back(true);
      arena.target.push_back(false);
      arena.successors[from].push_back(choice);
      for (StateId t : clause) {
        const auto to = node_for(t, next);
        arena.successors[choice].push_back(to);
      }
    }
  }
  return solve_buchi_game(arena)[root];
}

}  // namespace cocoa
