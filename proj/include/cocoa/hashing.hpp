// Hash helpers for the set-valued keys used by the subset constructions.
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cocoa {

inline void hash_combine(std::size_t& seed, std::size_t value) noexcept {
  seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

struct VectorHash {
  template <class T>
  std::size_t operator()(const std::vector<T>& v) const noexcept {
    std::size_t seed = v.size();
    for (const auto& x : v) hash_combine(seed, static_cast<std::size_t>(x));
    return seed;
  }
};

struct PairOfVectorsHash {
  template <class A, class B>
  std::size_t operator()(const std::pair<A, B>& p) const noexcept {
    std::size_t seed = VectorHash{}(p.first);
    hash_combine(seed, VectorHash{}(p.second));
    return seed;
  }
};

}  // namespace cocoa
