#include "cocoa/scc.hpp"

#include <algorithm>
#include <limits>

namespace cocoa {

SccDecomposition tarjan_scc(const Adjacency& adj) {
  constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
  const auto n = static_cast<std::uint32_t>(adj.size());
  SccDecomposition out;
  out.component.assign(n, kUnvisited);

  std::vector<std::uint32_t> index(n, kUnvisited);
  std::vector<std::uint32_t> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint32_t> stack;
  struct Frame {
    std::uint32_t node;
    std::size_t next_edge;
  };
  std::vector<Frame> call;
  std::uint32_t counter = 0;

  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& frame = call.back();
      const std::uint32_t v = frame.node;
      if (frame.next_edge < adj[v].size()) {
        const std::uint32_t w = adj[v][frame.next_edge++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        bool nontrivial = false;
        std::uint32_t members = 0;
        while (true) {
          const std::uint32_t w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          out.component[w] = out.count;
          ++members;
          if (w == v) break;
        }
        if (members > 1) nontrivial = true;
        if (!nontrivial) {
          nontrivial = std::find(adj[v].begin(), adj[v].end(), v) != adj[v].end();
        }
        out.nontrivial.push_back(nontrivial);
        ++out.count;
      }
      call.pop_back();
      if (!call.empty()) {
        const std::uint32_t parent = call.back().node;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }
  return out;
}

}  // namespace cocoa
