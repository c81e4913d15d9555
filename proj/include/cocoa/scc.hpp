// Tarjan's strongly connected components over adjacency lists.
#pragma once

#include <cstdint>
#include <vector>

namespace cocoa {

using Adjacency = std::vector<std::vector<std::uint32_t>>;

struct SccDecomposition {
  /// Component index per node.  Components are numbered in reverse topological
  /// order: every edge goes from a component to one with an index <= its own.
  std::vector<std::uint32_t> component;
  std::uint32_t count = 0;
  /// Component has more than one node or a self loop.
  std::vector<bool> nontrivial;
};

/// Iterative, visits roots and successors in index order so results are reproducible.
SccDecomposition tarjan_scc(const Adjacency& adj);

}  // namespace cocoa
