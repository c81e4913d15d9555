// Floating automata over an SLTM: level products, determinization and minimization.
#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "cocoa/sltm.hpp"

namespace cocoa {

using FloatId = std::uint32_t;
inline constexpr FloatId kUndefined = std::numeric_limits<FloatId>::max();

struct NfwState {
  SltmStateId label;
  FloatId pred;   // state of the previous level's DFW
  VertexId vertex;
};

/// Partial nondeterministic floating automaton.
struct Nfw {
  std::vector<NfwState> states;
  std::vector<std::vector<std::vector<FloatId>>> succ;  // [state][letter] sorted

  std::size_t size() const noexcept { return states.size(); }
  std::size_t transition_count() const;
};

struct DfwState {
  SltmStateId label;
  FloatId pred = kUndefined;  // kUndefined for the universal automaton
  VertexSet vertices;
};

/// Partial deterministic floating automaton; delta entries may be kUndefined.
struct Dfw {
  std::vector<DfwState> states;
  std::vector<std::vector<FloatId>> delta;

  std::size_t size() const noexcept { return states.size(); }
  bool empty() const noexcept { return states.empty(); }
  std::size_t transition_count() const;
};

/// SLTM-shaped total DFW with identity labels, minimized.
Dfw universal_dfw(const Sltm& m);

/// Product of the previous level with the obligation graph of the level's parity (the
/// complement graph for odd levels), restricted to SCCs that hold an accepting vertex.
Nfw level_product(const Dfw& prev, const Sltm& m, int level, const Budget& budget = Budget::unlimited());

/// Union of the subset constructions started from every single state.  Throws
/// InternalError if the result exceeds |prev|^2 * 2^|V| * |V| states.
Dfw determinize(const Nfw& n, const Dfw& prev, const Sltm& m, int level,
                const Budget& budget = Budget::unlimited());

/// Moore refinement seeded with the labels, quotient and transient-part removal, to a fixpoint.
Dfw minimize_dfw(const Dfw& d, const Sltm& m);

/// Some run jumping in at a state labeled with the current SLTM state continues forever.
bool dfw_accepts_lasso(const Dfw& d, const Sltm& m, const LassoWord& w);

/// Transitions (state, letter index, state) taken by runs on prefix·w that jump in after
/// the prefix.
std::set<std::tuple<FloatId, std::size_t, FloatId>> jump_in_transitions(
    const Dfw& d, const Sltm& m, const std::vector<Letter>& prefix, const LassoWord& w);

inline bool is_empty_dfw(const Dfw& d) { return d.empty(); }

/// Throws InternalError on a transition whose labels disagree with the SLTM.
void check_label_consistency(const Dfw& d, const Sltm& m);
void check_label_consistency(const Nfw& n, const Sltm& m);

/// The level's state bound as log2, for reporting.
double fl_size_bound_log2(std::size_t prev_states, std::size_t graph_vertices);

}  // namespace cocoa
