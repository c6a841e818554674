#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ddpart/types.hpp"

namespace ddpart {

/// A signed set of edges: +e for each positive, -e for each negative.
/// Both lists are sorted and disjoint.
struct SignedEdgeSet {
  EdgeSet positives;
  EdgeSet negatives;

  /// Sorts both lists and drops duplicates. Throws InputError when an edge
  /// appears with both signs.
  void normalize();
  /// positives ∪ negatives.
  EdgeSet abs() const;

  auto operator<=>(const SignedEdgeSet&) const = default;
};

std::string to_string(const SignedEdgeSet& s);

/// Arc selector for TDD nodes.
enum class Arc : std::uint8_t { kZero = 0, kPos = 1, kNeg = 2 };

/// Canonical ternary decision diagram store for signed families over 1..m.
///
/// A node is suppressed when both its POS and NEG children are bottom, so a
/// skipped label means the edge is absent from the signed set. Same threading
/// contract as ZddStore.
class TddStore {
 public:
  explicit TddStore(Label universe);

  TddStore(const TddStore&) = delete;
  TddStore& operator=(const TddStore&) = delete;
  TddStore(TddStore&&) = default;
  TddStore& operator=(TddStore&&) = default;

  Label universe() const { return universe_; }
  std::uint32_t id() const { return id_; }

  NodeRef get_node(Label label, NodeRef zero, NodeRef pos, NodeRef neg);

  Label label(NodeRef f) const;
  NodeRef child(NodeRef f, Arc arc) const;
  NodeRef zero(NodeRef f) const { return child(f, Arc::kZero); }
  NodeRef pos(NodeRef f) const { return child(f, Arc::kPos); }
  NodeRef neg(NodeRef f) const { return child(f, Arc::kNeg); }

  NodeRef from_signed_sets(std::span<const SignedEdgeSet> sets);

  BigInt count(NodeRef f) const;
  bool contains(NodeRef f, const SignedEdgeSet& s) const;
  void for_each(NodeRef f,
                const std::function<void(const SignedEdgeSet&)>& visit) const;
  std::vector<SignedEdgeSet> enumerate(NodeRef f) const;

  WidthProfile width_profile(NodeRef f) const;
  std::size_t size(NodeRef f) const;
  std::size_t node_count() const { return nodes_.size() - 2; }

  std::vector<std::string> audit() const;

  /// Graphviz rendering: dashed ZERO, solid POS, bold NEG.
  void write_dot(NodeRef f, std::ostream& out) const;

  void set_node_limit(std::size_t limit) { node_limit_ = limit; }
  void check_owned(NodeRef f) const;

 private:
  struct Node {
    Label label;
    std::array<NodeRef, 3> child;
  };
  struct Key {
    Label label;
    std::uint64_t zero;
    std::uint64_t pos;
    std::uint64_t neg;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };
  /// A signed literal: edge label and sign, ordered by label.
  struct Literal {
    Label label;
    Arc sign;
  };

  const Node& node(NodeRef f) const { return nodes_[f.index()]; }
  NodeRef make_ref(std::uint32_t index) const { return NodeRef(id_, index); }
  NodeRef build(std::vector<std::span<const Literal>>& suffixes);

  std::uint32_t id_;
  Label universe_;
  std::size_t node_limit_ = static_cast<std::size_t>(-1);
  std::vector<Node> nodes_;
  std::unordered_map<Key, std::uint32_t, KeyHash> unique_;
  mutable std::unordered_map<std::uint32_t, BigInt> count_cache_;
};

}  // namespace ddpart
