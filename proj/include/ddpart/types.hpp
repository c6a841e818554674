#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ddpart {

/// Edge index. Edges are numbered 1..m in input order; 0 is never a label.
using Label = std::uint32_t;
inline constexpr Label kTerminalLabel = std::numeric_limits<Label>::max();

/// Vertex id, 1..n.
using Vertex = std::uint32_t;

using BigInt = boost::multiprecision::cpp_int;

/// Sorted, duplicate-free list of edge labels.
using EdgeSet = std::vector<Label>;

/// Handle to a node inside a ZddStore or TddStore.
///
/// The two terminals are shared by every store. A non-terminal handle also
/// records the id of the store that created it so that mixing stores is
/// detected instead of silently reading the wrong pool.
class NodeRef {
 public:
  constexpr NodeRef() = default;

  static constexpr NodeRef bottom() { return NodeRef(0, 0); }
  static constexpr NodeRef top() { return NodeRef(0, 1); }

  constexpr bool is_terminal() const { return index_ < 2; }
  constexpr bool is_bottom() const { return index_ == 0; }
  constexpr bool is_top() const { return index_ == 1; }

  constexpr std::uint32_t index() const { return index_; }
  constexpr std::uint32_t store_id() const { return store_; }

  constexpr std::uint64_t bits() const {
    return (std::uint64_t{store_} << 32) | index_;
  }

  constexpr auto operator<=>(const NodeRef&) const = default;

 private:
  friend class ZddStore;
  friend class TddStore;
  constexpr NodeRef(std::uint32_t store, std::uint32_t index)
      : store_(store), index_(index) {}

  std::uint32_t store_ = 0;
  std::uint32_t index_ = 0;
};

inline constexpr NodeRef kBottom = NodeRef::bottom();
inline constexpr NodeRef kTop = NodeRef::top();

/// Misuse of an API: ordering violations, cross-store operands, bad vertex ids.
class UsageError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed user input: bad files, out-of-range indices in a family.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A node or state budget was exhausted.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Per-label node counts of a diagram. `per_label[i]` is |N_i| for i in 1..m
/// (index 0 unused).
struct WidthProfile {
  std::vector<std::size_t> per_label;
  std::size_t width = 0;
};

}  // namespace ddpart

template <>
struct std::hash<ddpart::NodeRef> {
  std::size_t operator()(const ddpart::NodeRef& r) const noexcept {
    return std::hash<std::uint64_t>{}(r.bits());
  }
};
