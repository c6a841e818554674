#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "ddpart/types.hpp"

namespace ddpart::detail {

inline std::uint32_t next_store_id() {
  static std::atomic<std::uint32_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

inline std::size_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return static_cast<std::size_t>(h);
}

/// Indices of the non-terminal nodes reachable from `root`, ascending.
template <class Children>
std::vector<std::uint32_t> reachable(NodeRef root, Children children) {
  std::vector<std::uint32_t> order;
  if (root.is_terminal()) return order;
  std::unordered_set<std::uint32_t> seen{root.index()};
  std::vector<NodeRef> stack{root};
  while (!stack.empty()) {
    NodeRef g = stack.back();
    stack.pop_back();
    order.push_back(g.index());
    for (NodeRef c : children(g)) {
      if (!c.is_terminal() && seen.insert(c.index()).second) {
        stack.push_back(c);
      }
    }
  }
  std::sort(order.begin(), order.end());
  return order;
}

}  // namespace ddpart::detail
