// Independent reference implementations and fixtures shared by the test suites.
#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "cocoa/chain.hpp"

namespace cocoa::testing {

struct Fixture {
  std::string text;
  std::vector<std::string> level_formulas;  // expected language of level 1..k
};

/// Reference formulas with the language of every level.
const std::vector<Fixture>& golden_fixtures();

struct Parsed {
  Formula formula;
  Alphabet alphabet;
};
Parsed parse(const std::string& text);
Parsed parse(const std::string& text, const std::vector<std::string>& aps);

/// Random NNF formula with at most `max_size` nodes over the given atoms.
Formula random_nnf(std::mt19937_64& rng, std::size_t max_size, const std::vector<std::string>& aps);

/// The fixed random corpus: `count` distinct formulas of size <= 6 over {a, b}.
std::vector<Formula> random_corpus(std::size_t count, std::uint64_t seed = 20240917);

/// Hand-built weak automaton for FG a ∨ GF b over 2^{a,b}: f-states track FG a,
/// g-states GF b, and g0 branches universally.
struct ReferenceAwa {
  Awa awa;
  StateId iota, f0, f1, f2, g0, g1, g2;
};
ReferenceAwa reference_awa();

/// Jump-in semantics of a partial nondeterministic floating automaton, written
/// independently of the library's DFW membership.
bool nfw_accepts_lasso(const Nfw& n, const Sltm& m, const LassoWord& w);

/// Per-level automata as produced by the staged construction.
struct Stage {
  Nfw nfw;
  Dfw determinized;
  Dfw minimized;
  std::size_t prev_size;
};
/// Replays the level loop, keeping every intermediate automaton; stops at the first
/// empty level (which is included as the last stage).
std::vector<Stage> staged_levels(const Sltm& m, std::size_t max_levels = 16);

/// All finite words of length <= n over the alphabet.
std::vector<std::vector<Letter>> words_up_to(const Alphabet& alphabet, std::size_t n);

LassoWord concat(const std::vector<Letter>& prefix, const LassoWord& w);

/// Every state lies on a cycle and every transition stays inside one SCC.
bool transient_free(const Nfw& n, std::size_t letters);
bool transient_free(const Dfw& d, std::size_t letters);

/// Result of replaying the naive lockstep construction alongside the SLTM.
struct Replay {
  std::size_t naive_states = 0;
  std::map<SltmStateId, std::pair<VertexSet, VertexSet>> covered;  // neg, pos unions
};
Replay replay_naive(const Sltm& m);

/// ⋂⋃ L(A_q) membership decided state by state with the word-checking game.
bool label_holds(const Label& l, const Awa& a, const LassoWord& w);

}  // namespace cocoa::testing
