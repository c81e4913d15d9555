// Obligation graphs: the Miyano-Hayashi breakpoint construction for weak AWAs.
#pragma once

#include <cstdint>
#include <vector>

#include "cocoa/awa.hpp"

namespace cocoa {

using VertexId = std::uint32_t;
using VertexSet = std::vector<VertexId>;  // sorted

/// (S, O): the states currently alive and the subset still owing a visit to F.
struct ObligationVertex {
  StateSet states;
  StateSet obligations;

  bool breakpoint() const noexcept { return obligations.empty(); }
  auto operator<=>(const ObligationVertex&) const = default;
};

class ObligationGraph {
public:
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  VertexId initial() const noexcept { return 0; }
  const ObligationVertex& vertex(VertexId v) const { return vertices_.at(v); }
  const std::vector<ObligationVertex>& vertices() const noexcept { return vertices_; }
  bool accepting(VertexId v) const { return vertices_.at(v).breakpoint(); }
  /// Sorted successors of v on the letter with the given index.
  const VertexSet& successors(VertexId v, std::size_t letter_index) const {
    return succ_.at(v).at(letter_index);
  }
  /// Image of a vertex set on one letter.
  VertexSet post(const VertexSet& from, std::size_t letter_index) const;

private:
  friend ObligationGraph miyano_hayashi(const Awa&, const Budget&);
  Alphabet alphabet_;
  std::vector<ObligationVertex> vertices_;
  std::vector<std::vector<VertexSet>> succ_;
};

/// Reachable part of the breakpoint construction.  L(result) = L(a).
ObligationGraph miyano_hayashi(const Awa& a, const Budget& budget = Budget::unlimited());

/// Some run visits a breakpoint vertex infinitely often.
bool nbw_accepts_lasso(const ObligationGraph& g, const LassoWord& w);

/// Successors of an obligation vertex on one letter: for every q in S one minimal
/// model of δ(q, x) is chosen, S' is their union and O' the union over q in O (or all
/// of S' after a breakpoint), minus accepting states.  Sorted and duplicate free.
std::vector<ObligationVertex> breakpoint_successors(const Awa& a, const ObligationVertex& v,
                                                    std::size_t letter_index);

}  // namespace cocoa
