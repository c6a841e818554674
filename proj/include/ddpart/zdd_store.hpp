#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ddpart/types.hpp"

namespace ddpart {

/// Canonical zero-suppressed decision diagram store over the universe 1..m.
///
/// Nodes are hash-consed and never mutated. A node whose 1-child is bottom is
/// never stored. Binary operations and counts are memoized per store. A store
/// is single-threaded; hand it to another thread only as a whole.
class ZddStore {
 public:
  explicit ZddStore(Label universe);

  ZddStore(const ZddStore&) = delete;
  ZddStore& operator=(const ZddStore&) = delete;
  ZddStore(ZddStore&&) = default;
  ZddStore& operator=(ZddStore&&) = default;

  Label universe() const { return universe_; }
  std::uint32_t id() const { return id_; }

  /// Returns `lo` when `hi` is bottom, otherwise the unique node for the
  /// triple. Throws UsageError if the label ordering is violated.
  NodeRef get_node(Label label, NodeRef lo, NodeRef hi);

  Label label(NodeRef f) const;
  NodeRef lo(NodeRef f) const;
  NodeRef hi(NodeRef f) const;

  /// Family of exactly the given sets. Each set may be unsorted and contain
  /// duplicates; indices outside 1..m raise InputError.
  NodeRef from_sets(std::span<const EdgeSet> sets);
  NodeRef singleton(const EdgeSet& set);

  /// All 2^m subsets of {1..m}, as a chain of lo == hi nodes. m <= universe.
  NodeRef all_subsets(Label m);
  NodeRef all_subsets() { return all_subsets(universe_); }

  NodeRef unite(NodeRef a, NodeRef b);
  NodeRef intersect(NodeRef a, NodeRef b);
  NodeRef subtract(NodeRef a, NodeRef b);

  BigInt count(NodeRef f) const;
  bool contains(NodeRef f, const EdgeSet& set) const;

  /// Calls `visit` once per member, in lexicographic order of 0/1 choices
  /// (lo before hi).
  void for_each(NodeRef f,
                const std::function<void(const EdgeSet&)>& visit) const;
  std::vector<EdgeSet> enumerate(NodeRef f) const;

  /// The member with the given rank in `for_each` order; rank < count(f).
  EdgeSet member_at(NodeRef f, BigInt rank) const;

  WidthProfile width_profile(NodeRef f) const;
  /// Number of non-terminal nodes reachable from `f`.
  std::size_t size(NodeRef f) const;
  /// Number of non-terminal nodes ever stored.
  std::size_t node_count() const { return nodes_.size() - 2; }

  /// Empty when every stored node is canonical; otherwise one message per
  /// violation (suppressed-form node, duplicate triple, bad ordering).
  std::vector<std::string> audit() const;

  /// Graphviz rendering: dashed 0-arcs, solid 1-arcs.
  void write_dot(NodeRef f, std::ostream& out) const;

  /// Throws ResourceError once more than `limit` non-terminal nodes exist.
  void set_node_limit(std::size_t limit) { node_limit_ = limit; }
  std::size_t node_limit() const { return node_limit_; }

  /// Throws UsageError unless `f` is a terminal or a node of this store.
  void check_owned(NodeRef f) const;

 private:
  struct Node {
    Label label;
    NodeRef lo;
    NodeRef hi;
  };
  struct Key {
    Label label;
    std::uint64_t lo;
    std::uint64_t hi;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };
  enum class Op : std::uint8_t { kUnion, kIntersect, kSubtract };
  struct OpKey {
    Op op;
    std::uint32_t a;
    std::uint32_t b;
    bool operator==(const OpKey&) const = default;
  };
  struct OpKeyHash {
    std::size_t operator()(const OpKey& k) const noexcept;
  };

  const Node& node(NodeRef f) const { return nodes_[f.index()]; }
  NodeRef make_ref(std::uint32_t index) const { return NodeRef(id_, index); }
  NodeRef build(std::vector<std::span<const Label>>& suffixes);
  void check_pair(NodeRef a, NodeRef b) const;

  std::uint32_t id_;
  Label universe_;
  std::size_t node_limit_ = static_cast<std::size_t>(-1);
  std::vector<Node> nodes_;
  std::unordered_map<Key, std::uint32_t, KeyHash> unique_;
  std::unordered_map<OpKey, NodeRef, OpKeyHash> op_cache_;
  mutable std::unordered_map<std::uint32_t, BigInt> count_cache_;
};

}  // namespace ddpart
