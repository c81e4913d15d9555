// Weak alternating Büchi automata with PCNF transition formulas.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cocoa/base.hpp"
#include "cocoa/formula.hpp"

namespace cocoa {

using StateId = std::uint32_t;
using StateSet = std::vector<StateId>;  // sorted, duplicate free
using Clause = StateSet;                // disjunction of states

/// Positive CNF over states without the constants true/false.
class Pcnf {
public:
  Pcnf() = default;
  /// Canonicalizes: sorts clauses and drops duplicates and supersets.  Throws
  /// InvalidParameter if the result would be empty or contain an empty clause.
  explicit Pcnf(std::vector<Clause> clauses);

  static Pcnf single(StateId q) { return Pcnf(std::vector<Clause>{Clause{q}}); }

  const std::vector<Clause>& clauses() const noexcept { return clauses_; }
  bool empty() const noexcept { return clauses_.empty(); }

  /// Set of all states mentioned.
  StateSet atoms() const;
  bool satisfied_by(const StateSet& model) const;
  /// Minimal hitting sets of the clauses, in lexicographic order.
  std::vector<StateSet> minimal_models() const;
  /// CNF of the dual formula (swap and/or), canonicalized.
  Pcnf dual() const;

  std::string to_string(const std::vector<std::string>& names) const;

  bool operator==(const Pcnf&) const = default;

private:
  std::vector<Clause> clauses_;
};

/// Removes duplicate and superset clauses and sorts what remains.
std::vector<Clause> minimize_clauses(std::vector<Clause> clauses);

class Awa {
public:
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return accepting_.size(); }
  StateId initial() const noexcept { return initial_; }
  StateId top() const noexcept { return top_; }
  StateId bottom() const noexcept { return bottom_; }
  bool accepting(StateId q) const { return accepting_.at(q); }
  const std::vector<bool>& accepting_states() const noexcept { return accepting_; }
  unsigned rank(StateId q) const { return rank_.at(q); }
  const std::vector<unsigned>& ranks() const noexcept { return rank_; }
  const Pcnf& delta(StateId q, std::size_t letter_index) const {
    return delta_.at(q).at(letter_index);
  }
  const std::vector<std::vector<Pcnf>>& transitions() const noexcept { return delta_; }
  const std::string& name(StateId q) const { return names_.at(q); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  /// Same structure with a different initial state (A_q).
  Awa with_initial(StateId q) const;

private:
  friend class AwaBuilder;
  friend Awa dualize(const Awa& a);

  Alphabet alphabet_;
  std::vector<std::string> names_;
  StateId initial_ = 0;
  StateId top_ = 0;
  StateId bottom_ = 0;
  std::vector<std::vector<Pcnf>> delta_;
  std::vector<bool> accepting_;
  std::vector<unsigned> rank_;
};

/// Assembles an Awa; build() checks totality and weakness and assigns ranks.
/// The sinks top and bottom are created on construction.
class AwaBuilder {
public:
  explicit AwaBuilder(Alphabet alphabet);

  StateId add_state(std::string name, bool accepting);
  StateId top() const noexcept { return 0; }
  StateId bottom() const noexcept { return 1; }
  void set_initial(StateId q) { initial_ = q; }
  void set_transition(StateId q, std::size_t letter_index, Pcnf formula);
  /// Same formula for every letter.
  void set_transition_all(StateId q, const Pcnf& formula);

  Awa build() const;

private:
  Alphabet alphabet_;
  std::vector<std::string> names_;
  std::vector<bool> accepting_;
  std::vector<std::vector<std::optional<Pcnf>>> delta_;
  std::optional<StateId> initial_;
};

/// Ranks from the SCC condensation (successors never have larger rank; equal rank
/// means same SCC).  Throws NotWeak naming a mixed SCC.
std::vector<unsigned> check_weak(const std::vector<std::vector<Pcnf>>& delta,
                                 const std::vector<bool>& accepting);
inline std::vector<unsigned> check_weak(const Awa& a) {
  return check_weak(a.transitions(), a.accepting_states());
}

/// One state per reachable closure formula plus the two sinks.  Throws NotNnf.
Awa from_ltl(const Formula& f, const Alphabet& alphabet);

/// Complement automaton: dual transition formulas, complemented acceptance,
/// top/bottom roles swapped.  Same state ids and ranks.
Awa dualize(const Awa& a);

/// Acceptor wins the word-checking game on w.
bool accepts_lasso(const Awa& a, const LassoWord& w);

/// L(a) is empty.
bool is_empty(const Awa& a, const Budget& budget = Budget::unlimited());

/// An accepted lasso if L(a) is non-empty, extracted from an accepting cycle of the
/// breakpoint graph.
std::optional<LassoWord> emptiness_witness(const Awa& a,
                                           const Budget& budget = Budget::unlimited());

}  // namespace cocoa
