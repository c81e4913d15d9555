// Two-player Büchi games on explicit arenas.
#pragma once

#include <vector>

#include "cocoa/scc.hpp"

namespace cocoa {

struct BuchiArena {
  /// true: the node belongs to the player who wants to visit targets infinitely often.
  std::vector<bool> owned_by_acceptor;
  Adjacency successors;
  std::vector<bool> target;
};

/// Winning region of the acceptor, by the classical attractor recurrence.
std::vector<bool> solve_buchi_game(const BuchiArena& arena);

}  // namespace cocoa
