// The chain of co-Büchi automata: level construction, HD-NCW views and natural colors.
#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "cocoa/floating.hpp"

namespace cocoa {

struct NcwTransition {
  std::uint32_t from;
  std::size_t letter;  // letter index
  std::uint32_t to;
  bool accepting;

  auto operator<=>(const NcwTransition&) const = default;
};

/// States 0..sltm_states-1 mirror the SLTM, the rest are DFW states shifted by sltm_states.
struct HdNcw {
  Alphabet alphabet;
  std::size_t sltm_states = 0;
  std::size_t dfw_states = 0;
  std::uint32_t initial = 0;
  std::vector<NcwTransition> transitions;  // sorted

  std::size_t size() const noexcept { return sltm_states + dfw_states; }
  std::size_t accepting_count() const;
};

/// Accepting transitions are the DFW's; rejecting ones follow the SLTM and may jump
/// into any DFW state with a matching label.
HdNcw dfw_to_hd_ncw(const Dfw& d, const Sltm& m);

/// Some reachable cycle of the lasso product uses accepting transitions only.
bool ncw_accepts_lasso(const HdNcw& c, const LassoWord& w);

struct Level {
  Dfw dfw;
  HdNcw ncw;
  std::size_t nfw_states = 0;
  std::size_t determinized_states = 0;
};

struct Cocoa {
  Formula formula = Formula::tt();
  std::shared_ptr<const Sltm> sltm;
  Dfw universal;
  std::vector<Level> levels;

  std::size_t k() const noexcept { return levels.size(); }
  const Alphabet& alphabet() const noexcept { return sltm->alphabet(); }
};

Cocoa build_chain(const Formula& f, const Alphabet& alphabet,
                  const Budget& budget = Budget::unlimited());

/// Highest level whose DFW accepts w, 0 if none.
int natural_color(const Cocoa& chain, const LassoWord& w);

/// Acceptance of w at every level, index 0 holding level 1.
std::vector<bool> level_memberships(const Cocoa& chain, const LassoWord& w);

struct Counterexample {
  LassoWord word;
  int color = 0;
  bool member = false;  // the formula's verdict
  bool monotonicity_violated = false;
};

struct VerifyReport {
  std::size_t lassos = 0;
  std::size_t counterexamples = 0;
  std::size_t monotonicity_violations = 0;
  std::vector<std::size_t> color_histogram;
  std::optional<Counterexample> first;
  double seconds = 0.0;

  bool ok() const noexcept { return counterexamples == 0 && monotonicity_violations == 0; }
};

/// Checks parity of the natural color against the formula and chain monotonicity on all
/// canonical lassos within the bounds.
VerifyReport verify_chain(const Cocoa& chain, const Formula& f, std::size_t prefix_bound,
                          std::size_t period_bound);

/// Copy of the chain with one DFW transition removed (selected by seed among all level
/// transitions) and the HD-NCW of that level rebuilt.  Throws InvalidParameter if the
/// chain has no transitions.
Cocoa drop_accepting_transition(const Cocoa& chain, std::uint64_t seed);

}  // namespace cocoa
