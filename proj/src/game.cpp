#include "cocoa/game.hpp"

#include <cstdint>

namespace cocoa {

namespace {

/// Nodes in `alive` from which `player_acceptor` can force reaching `goal`.
std::vector<bool> attractor(const BuchiArena& arena, const Adjacency& preds,
                            const std::vector<bool>& alive, const std::vector<bool>& goal,
                            bool player_acceptor) {
  const std::size_t n = arena.successors.size();
  std::vector<bool> attr(n, false);
  std::vector<std::uint32_t> remaining(n, 0);
  std::vector<std::uint32_t> queue;
  for (std::size_t v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    for (auto w : arena.successors[v]) {
      if (alive[w]) ++remaining[v];
    }
    if (goal[v]) {
      attr[v] = true;
      queue.push_back(static_cast<std::uint32_t>(v));
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto w = queue[head];
    for (auto v : preds[w]) {
      if (!alive[v] || attr[v]) continue;
      if (arena.owned_by_acceptor[v] == player_acceptor || --remaining[v] == 0) {
        attr[v] = true;
        queue.push_back(v);
      }
    }
  }
  return attr;
}

}  // namespace

std::vector<bool> solve_buchi_game(const BuchiArena& arena) {
  const std::size_t n = arena.successors.size();
  Adjacency preds(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (auto w : arena.successors[v]) preds[w].push_back(static_cast<std::uint32_t>(v));
  }
  std::vector<bool> alive(n, true);
  while (true) {
    std::vector<bool> goal(n, false);
    for (std::size_t v = 0; v < n; ++v) goal[v] = alive[v] && arena.target[v];
    const auto reach = attractor(arena, preds, alive, goal, true);
    std::vector<bool> avoid(n, false);
    bool any = false;
    for (std::size_t v = 0; v < n; ++v) {
      avoid[v] = alive[v] && !reach[v];
      any = any || avoid[v];
    }
    if (!any) return alive;
    const auto lost = attractor(arena, preds, alive, avoid, false);
    for (std::size_t v = 0; v < n; ++v) {
      if (lost[v]) alive[v] = false;
    }
  }
}

}  // namespace cocoa
