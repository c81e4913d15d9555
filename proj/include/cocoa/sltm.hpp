// Canonical suffix-language tracking machine with dual vertex-set labelings.
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cocoa/awa.hpp"
#include "cocoa/obligation.hpp"

namespace cocoa {

/// Intersection of unions: ⋂_i ⋃_{q ∈ unions[i]} L(A_q).  No unions means Σ^ω.
struct Label {
  std::vector<StateSet> unions;  // canonical: sorted, no union contains another

  /// Canonical form of an arbitrary union list.  Throws InvalidParameter on an empty union.
  static Label from_unions(std::vector<StateSet> unions);

  std::string to_string() const;
  auto operator<=>(const Label&) const = default;
};

/// One union per vertex holding its whole state set.
Label label_of(const ObligationGraph& g, const VertexSet& vertices);

/// Decides label inclusion and equivalence over a fixed automaton, with caching.
class LabelOracle {
public:
  LabelOracle(const Awa& a, const Awa& a_dual, Budget budget = Budget::unlimited());

  /// ⋂⋃ L(A_q) of l1 is contained in that of l2.
  bool includes(const Label& l1, const Label& l2);
  bool equivalent(const Label& l1, const Label& l2);

  std::size_t emptiness_checks() const noexcept { return checks_; }

private:
  bool union_covers(const Label& l1, const StateSet& c);
  void check_states(const Label& l) const;

  const Awa& a_;
  const Awa& dual_;
  Budget budget_;
  std::map<std::pair<Label, StateSet>, bool> cache_;
  std::size_t checks_ = 0;
};

/// Emptiness of (l1 ∧ ¬C) for one union C, as a fresh-letter alternating automaton over
/// the disjoint union of a and a_dual.  Exposed for tests.
Awa label_difference_automaton(const Label& l1, const StateSet& c, const Awa& a,
                               const Awa& a_dual);

bool labels_equivalent(const Label& l1, const Label& l2, const Awa& a, const Awa& a_dual);

using SltmStateId = std::uint32_t;

class Sltm {
public:
  const Alphabet& alphabet() const noexcept { return awa_->alphabet(); }
  std::size_t size() const noexcept { return labels_.size(); }
  SltmStateId initial() const noexcept { return 0; }
  SltmStateId successor(SltmStateId q, std::size_t letter_index) const {
    return delta_.at(q).at(letter_index);
  }
  const std::vector<std::vector<SltmStateId>>& transitions() const noexcept { return delta_; }
  /// Vertices of the complement obligation graph (λ̃).
  const VertexSet& vertex_set_neg(SltmStateId q) const { return neg_.at(q); }
  /// Vertices of the obligation graph of L(A) (λ).
  const VertexSet& vertex_set_pos(SltmStateId q) const { return pos_.at(q); }
  /// Suffix language of L(A) for prefixes reaching q.
  const Label& label(SltmStateId q) const { return labels_.at(q); }

  const Awa& awa() const noexcept { return *awa_; }
  const Awa& awa_dual() const noexcept { return *dual_; }
  const ObligationGraph& graph_neg() const noexcept { return *g_neg_; }
  const ObligationGraph& graph_pos() const noexcept { return *g_pos_; }

  /// Number of states of the naive machine before merging.
  std::size_t naive_size() const noexcept { return naive_size_; }

private:
  friend Sltm build_canonical_sltm(const Awa&, const Budget&);

  std::shared_ptr<const Awa> awa_, dual_;
  std::shared_ptr<const ObligationGraph> g_neg_, g_pos_;
  std::vector<std::vector<SltmStateId>> delta_;
  std::vector<VertexSet> neg_, pos_;
  std::vector<Label> labels_;
  std::size_t naive_size_ = 0;
};

/// Naive lockstep subset construction over both obligation graphs, merged by label
/// equivalence.  Throws InternalError if a merged class has successors in distinct classes.
Sltm build_canonical_sltm(const Awa& a, const Budget& budget = Budget::unlimited());

SltmStateId sltm_state_after(const Sltm& m, const std::vector<Letter>& prefix);

}  // namespace cocoa
