#include "ddpart/zdd_store.hpp"

#include <algorithm>
#include <array>
#include <ostream>

#include "store_detail.hpp"

namespace ddpart {

std::size_t ZddStore::KeyHash::operator()(const Key& k) const noexcept {
  std::size_t h = detail::mix(k.label, k.lo);
  return detail::mix(h, k.hi);
}

std::size_t ZddStore::OpKeyHash::operator()(const OpKey& k) const noexcept {
  std::size_t h = detail::mix(static_cast<std::uint64_t>(k.op), k.a);
  return detail::mix(h, k.b);
}

ZddStore::ZddStore(Label universe)
    : id_(detail::next_store_id()), universe_(universe) {
  nodes_.push_back({kTerminalLabel, kBottom, kBottom});
  nodes_.push_back({kTerminalLabel, kBottom, kBottom});
}

void ZddStore::check_owned(NodeRef f) const {
  if (f.is_terminal()) return;
  if (f.store_id() != id_ || f.index() >= nodes_.size()) {
    throw UsageError("ZddStore: node handle belongs to another store");
  }
}

void ZddStore::check_pair(NodeRef a, NodeRef b) const {
  check_owned(a);
  check_owned(b);
}

Label ZddStore::label(NodeRef f) const {
  check_owned(f);
  return node(f).label;
}

NodeRef ZddStore::lo(NodeRef f) const {
  check_owned(f);
  if (f.is_terminal()) throw UsageError("ZddStore::lo on a terminal");
  return node(f).lo;
}

NodeRef ZddStore::hi(NodeRef f) const {
  check_owned(f);
  if (f.is_terminal()) throw UsageError("ZddStore::hi on a terminal");
  return node(f).hi;
}

NodeRef ZddStore::get_node(Label label, NodeRef lo, NodeRef hi) {
  check_pair(lo, hi);
  if (label == 0 || label > universe_) {
    throw UsageError("ZddStore::get_node: label " + std::to_string(label) +
                     " outside 1.." + std::to_string(universe_));
  }
  if (node(lo).label <= label || node(hi).label <= label) {
    throw UsageError("ZddStore::get_node: child label must exceed " +
                     std::to_string(label));
  }
  if (hi.is_bottom()) return lo;

  Key key{label, lo.bits(), hi.bits()};
  if (auto it = unique_.find(key); it != unique_.end()) {
    return make_ref(it->second);
  }
  if (node_count() >= node_limit_) {
    throw ResourceError("ZDD node limit of " + std::to_string(node_limit_) +
                        " exceeded");
  }
  auto index = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back({label, lo, hi});
  unique_.emplace(key, index);
  return make_ref(index);
}

NodeRef ZddStore::build(std::vector<std::span<const Label>>& suffixes) {
  if (suffixes.empty()) return kBottom;
  Label first = kTerminalLabel;
  for (auto s : suffixes) {
    if (!s.empty()) first = std::min(first, s.front());
  }
  if (first == kTerminalLabel) return kTop;

  std::vector<std::span<const Label>> without;
  std::vector<std::span<const Label>> with;
  for (auto s : suffixes) {
    if (!s.empty() && s.front() == first) {
      with.push_back(s.subspan(1));
    } else {
      without.push_back(s);
    }
  }
  NodeRef lo_child = build(without);
  NodeRef hi_child = build(with);
  return get_node(first, lo_child, hi_child);
}

NodeRef ZddStore::from_sets(std::span<const EdgeSet> sets) {
  std::vector<EdgeSet> normalized;
  normalized.reserve(sets.size());
  for (const auto& set : sets) {
    EdgeSet s = set;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (Label e : s) {
      if (e == 0 || e > universe_) {
        throw InputError("edge index " + std::to_string(e) + " outside 1.." +
                         std::to_string(universe_));
      }
    }
    normalized.push_back(std::move(s));
  }
  std::vector<std::span<const Label>> suffixes(normalized.begin(),
                                               normalized.end());
  return build(suffixes);
}

NodeRef ZddStore::singleton(const EdgeSet& set) {
  return from_sets(std::span<const EdgeSet>(&set, 1));
}

NodeRef ZddStore::all_subsets(Label m) {
  if (m > universe_) {
    throw UsageError("all_subsets: m exceeds the store universe");
  }
  NodeRef f = kTop;
  for (Label e = m; e >= 1; --e) f = get_node(e, f, f);
  return f;
}

NodeRef ZddStore::unite(NodeRef a, NodeRef b) {
  check_pair(a, b);
  if (a.is_bottom()) return b;
  if (b.is_bottom() || a == b) return a;
  if (b < a) std::swap(a, b);

  OpKey key{Op::kUnion, a.index(), b.index()};
  if (auto it = op_cache_.find(key); it != op_cache_.end()) return it->second;

  // Copies: recursion may grow nodes_ and invalidate references.
  const Node na = node(a);
  const Node nb = node(b);
  const Label la = na.label;
  const Label lb = nb.label;
  NodeRef r;
  if (la < lb) {
    r = get_node(la, unite(na.lo, b), na.hi);
  } else if (lb < la) {
    r = get_node(lb, unite(a, nb.lo), nb.hi);
  } else {
    r = get_node(la, unite(na.lo, nb.lo),
                 unite(na.hi, nb.hi));
  }
  op_cache_.emplace(key, r);
  return r;
}

NodeRef ZddStore::intersect(NodeRef a, NodeRef b) {
  check_pair(a, b);
  if (a.is_bottom() || b.is_bottom()) return kBottom;
  if (a == b) return a;
  if (b < a) std::swap(a, b);

  OpKey key{Op::kIntersect, a.index(), b.index()};
  if (auto it = op_cache_.find(key); it != op_cache_.end()) return it->second;

  const Node na = node(a);
  const Node nb = node(b);
  const Label la = na.label;
  const Label lb = nb.label;
  NodeRef r;
  if (la < lb) {
    r = intersect(na.lo, b);
  } else if (lb < la) {
    r = intersect(a, nb.lo);
  } else {
    r = get_node(la, intersect(na.lo, nb.lo),
                 intersect(na.hi, nb.hi));
  }
  op_cache_.emplace(key, r);
  return r;
}

NodeRef ZddStore::subtract(NodeRef a, NodeRef b) {
  check_pair(a, b);
  if (a.is_bottom() || a == b) return kBottom;
  if (b.is_bottom()) return a;

  OpKey key{Op::kSubtract, a.index(), b.index()};
  if (auto it = op_cache_.find(key); it != op_cache_.end()) return it->second;

  const Node na = node(a);
  const Node nb = node(b);
  const Label la = na.label;
  const Label lb = nb.label;
  NodeRef r;
  if (la < lb) {
    r = get_node(la, subtract(na.lo, b), na.hi);
  } else if (lb < la) {
    r = subtract(a, nb.lo);
  } else {
    r = get_node(la, subtract(na.lo, nb.lo),
                 subtract(na.hi, nb.hi));
  }
  op_cache_.emplace(key, r);
  return r;
}

BigInt ZddStore::count(NodeRef f) const {
  check_owned(f);
  if (f.is_bottom()) return 0;
  if (f.is_top()) return 1;
  if (auto it = count_cache_.find(f.index()); it != count_cache_.end()) {
    return it->second;
  }
  BigInt c = count(node(f).lo) + count(node(f).hi);
  count_cache_.emplace(f.index(), c);
  return c;
}

bool ZddStore::contains(NodeRef f, const EdgeSet& set) const {
  check_owned(f);
  EdgeSet s = set;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  auto it = s.begin();
  while (!f.is_terminal()) {
    const Node& n = node(f);
    if (it != s.end() && *it < n.label) return false;
    if (it != s.end() && *it == n.label) {
      f = n.hi;
      ++it;
    } else {
      f = n.lo;
    }
  }
  return f.is_top() && it == s.end();
}

void ZddStore::for_each(
    NodeRef f, const std::function<void(const EdgeSet&)>& visit) const {
  check_owned(f);
  EdgeSet path;
  std::function<void(NodeRef)> walk = [&](NodeRef g) {
    if (g.is_bottom()) return;
    if (g.is_top()) {
      visit(path);
      return;
    }
    const Node& n = node(g);
    walk(n.lo);
    path.push_back(n.label);
    walk(n.hi);
    path.pop_back();
  };
  walk(f);
}

std::vector<EdgeSet> ZddStore::enumerate(NodeRef f) const {
  std::vector<EdgeSet> out;
  for_each(f, [&](const EdgeSet& s) { out.push_back(s); });
  return out;
}

EdgeSet ZddStore::member_at(NodeRef f, BigInt rank) const {
  check_owned(f);
  if (rank < 0 || rank >= count(f)) {
    throw UsageError("ZddStore::member_at: rank out of range");
  }
  EdgeSet out;
  while (!f.is_top()) {
    const Node& n = node(f);
    BigInt lo_count = count(n.lo);
    if (rank < lo_count) {
      f = n.lo;
    } else {
      rank -= lo_count;
      out.push_back(n.label);
      f = n.hi;
    }
  }
  return out;
}

WidthProfile ZddStore::width_profile(NodeRef f) const {
  check_owned(f);
  WidthProfile profile;
  profile.per_label.assign(universe_ + 1, 0);
  auto order = detail::reachable(f, [&](NodeRef g) {
    return std::array<NodeRef, 2>{node(g).lo, node(g).hi};
  });
  for (auto index : order) ++profile.per_label[nodes_[index].label];
  for (auto c : profile.per_label) profile.width = std::max(profile.width, c);
  return profile;
}

std::size_t ZddStore::size(NodeRef f) const {
  check_owned(f);
  return detail::reachable(f, [&](NodeRef g) {
           return std::array<NodeRef, 2>{node(g).lo, node(g).hi};
         }).size();
}

std::vector<std::string> ZddStore::audit() const {
  std::vector<std::string> problems;
  std::unordered_map<Key, std::uint32_t, KeyHash> seen;
  for (std::uint32_t i = 2; i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    std::string where = "node " + std::to_string(i) + ": ";
    if (n.hi.is_bottom()) problems.push_back(where + "1-child is bottom");
    if (n.label == 0 || n.label > universe_) {
      problems.push_back(where + "label out of range");
    }
    if (nodes_[n.lo.index()].label <= n.label ||
        nodes_[n.hi.index()].label <= n.label) {
      problems.push_back(where + "child label not greater than own label");
    }
    if (!seen.emplace(Key{n.label, n.lo.bits(), n.hi.bits()}, i).second) {
      problems.push_back(where + "duplicate (label, lo, hi)");
    }
  }
  if (seen.size() != unique_.size()) {
    problems.push_back("unique table size differs from node pool");
  }
  return problems;
}

void ZddStore::write_dot(NodeRef f, std::ostream& out) const {
  check_owned(f);
  out << "digraph zdd {\n";
  out << "  t0 [shape=box,label=\"0\"];\n  t1 [shape=box,label=\"1\"];\n";
  auto name = [](NodeRef g) {
    if (g.is_bottom()) return std::string("t0");
    if (g.is_top()) return std::string("t1");
    return "n" + std::to_string(g.index());
  };
  auto order = detail::reachable(f, [&](NodeRef g) {
    return std::array<NodeRef, 2>{node(g).lo, node(g).hi};
  });
  for (auto index : order) {
    const Node& n = nodes_[index];
    NodeRef self = make_ref(index);
    // id label lo hi
    out << "  // " << index << ' ' << n.label << ' ' << name(n.lo) << ' '
        << name(n.hi) << '\n';
    out << "  " << name(self) << " [shape=circle,label=\"" << n.label
        << "\"];\n";
    out << "  " << name(self) << " -> " << name(n.lo) << " [style=dashed];\n";
    out << "  " << name(self) << " -> " << name(n.hi) << " [style=solid];\n";
  }
  if (f.is_terminal()) out << "  root -> " << name(f) << ";\n";
  out << "}\n";
}

}  // namespace ddpart
