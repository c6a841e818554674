#include "ddpart/tdd_store.hpp"

#include <algorithm>
#include <ostream>

#include "store_detail.hpp"

namespace ddpart {

void SignedEdgeSet::normalize() {
  for (auto* list : {&positives, &negatives}) {
    std::sort(list->begin(), list->end());
    list->erase(std::unique(list->begin(), list->end()), list->end());
  }
  EdgeSet both;
  std::set_intersection(positives.begin(), positives.end(), negatives.begin(),
                        negatives.end(), std::back_inserter(both));
  if (!both.empty()) {
    throw InputError("signed set holds both +" + std::to_string(both[0]) +
                     " and -" + std::to_string(both[0]));
  }
}

EdgeSet SignedEdgeSet::abs() const {
  EdgeSet out;
  std::merge(positives.begin(), positives.end(), negatives.begin(),
             negatives.end(), std::back_inserter(out));
  return out;
}

std::string to_string(const SignedEdgeSet& s) {
  std::vector<std::pair<Label, char>> items;
  for (Label e : s.positives) items.emplace_back(e, '+');
  for (Label e : s.negatives) items.emplace_back(e, '-');
  std::sort(items.begin(), items.end());
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i].second;
    out += std::to_string(items[i].first);
  }
  return out + "}";
}

std::size_t TddStore::KeyHash::operator()(const Key& k) const noexcept {
  std::size_t h = detail::mix(k.label, k.zero);
  h = detail::mix(h, k.pos);
  return detail::mix(h, k.neg);
}

TddStore::TddStore(Label universe)
    : id_(detail::next_store_id()), universe_(universe) {
  nodes_.push_back({kTerminalLabel, {kBottom, kBottom, kBottom}});
  nodes_.push_back({kTerminalLabel, {kBottom, kBottom, kBottom}});
}

void TddStore::check_owned(NodeRef f) const {
  if (f.is_terminal()) return;
  if (f.store_id() != id_ || f.index() >= nodes_.size()) {
    throw UsageError("TddStore: node handle belongs to another store");
  }
}

Label TddStore::label(NodeRef f) const {
  check_owned(f);
  return node(f).label;
}

NodeRef TddStore::child(NodeRef f, Arc arc) const {
  check_owned(f);
  if (f.is_terminal()) throw UsageError("TddStore::child on a terminal");
  return node(f).child[static_cast<std::size_t>(arc)];
}

NodeRef TddStore::get_node(Label label, NodeRef zero, NodeRef pos,
                           NodeRef neg) {
  for (NodeRef c : {zero, pos, neg}) {
    check_owned(c);
    if (node(c).label <= label) {
      throw UsageError("TddStore::get_node: child label must exceed " +
                       std::to_string(label));
    }
  }
  if (label == 0 || label > universe_) {
    throw UsageError("TddStore::get_node: label " + std::to_string(label) +
                     " outside 1.." + std::to_string(universe_));
  }
  if (pos.is_bottom() && neg.is_bottom()) return zero;

  Key key{label, zero.bits(), pos.bits(), neg.bits()};
  if (auto it = unique_.find(key); it != unique_.end()) {
    return make_ref(it->second);
  }
  if (node_count() >= node_limit_) {
    throw ResourceError("TDD node limit of " + std::to_string(node_limit_) +
                        " exceeded");
  }
  auto index = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back({label, {zero, pos, neg}});
  unique_.emplace(key, index);
  return make_ref(index);
}

NodeRef TddStore::build(std::vector<std::span<const Literal>>& suffixes) {
  if (suffixes.empty()) return kBottom;
  Label first = kTerminalLabel;
  for (auto s : suffixes) {
    if (!s.empty()) first = std::min(first, s.front().label);
  }
  if (first == kTerminalLabel) return kTop;

  std::array<std::vector<std::span<const Literal>>, 3> parts;
  for (auto s : suffixes) {
    if (!s.empty() && s.front().label == first) {
      parts[static_cast<std::size_t>(s.front().sign)].push_back(s.subspan(1));
    } else {
      parts[0].push_back(s);
    }
  }
  NodeRef z = build(parts[0]);
  NodeRef p = build(parts[1]);
  NodeRef n = build(parts[2]);
  return get_node(first, z, p, n);
}

NodeRef TddStore::from_signed_sets(std::span<const SignedEdgeSet> sets) {
  std::vector<std::vector<Literal>> literals;
  literals.reserve(sets.size());
  for (const auto& set : sets) {
    SignedEdgeSet s = set;
    s.normalize();
    std::vector<Literal> lits;
    for (Label e : s.positives) lits.push_back({e, Arc::kPos});
    for (Label e : s.negatives) lits.push_back({e, Arc::kNeg});
    for (const auto& lit : lits) {
      if (lit.label == 0 || lit.label > universe_) {
        throw InputError("edge index " + std::to_string(lit.label) +
                         " outside 1.." + std::to_string(universe_));
      }
    }
    std::sort(lits.begin(), lits.end(),
              [](const Literal& a, const Literal& b) { return a.label < b.label; });
    literals.push_back(std::move(lits));
  }
  std::vector<std::span<const Literal>> suffixes(literals.begin(),
                                                 literals.end());
  return build(suffixes);
}

BigInt TddStore::count(NodeRef f) const {
  check_owned(f);
  if (f.is_bottom()) return 0;
  if (f.is_top()) return 1;
  if (auto it = count_cache_.find(f.index()); it != count_cache_.end()) {
    return it->second;
  }
  const Node& n = node(f);
  BigInt c = count(n.child[0]) + count(n.child[1]) + count(n.child[2]);
  count_cache_.emplace(f.index(), c);
  return c;
}

bool TddStore::contains(NodeRef f, const SignedEdgeSet& s) const {
  check_owned(f);
  SignedEdgeSet set = s;
  set.normalize();
  std::vector<Literal> lits;
  for (Label e : set.positives) lits.push_back({e, Arc::kPos});
  for (Label e : set.negatives) lits.push_back({e, Arc::kNeg});
  std::sort(lits.begin(), lits.end(),
            [](const Literal& a, const Literal& b) { return a.label < b.label; });
  auto it = lits.begin();
  while (!f.is_terminal()) {
    const Node& n = node(f);
    if (it != lits.end() && it->label < n.label) return false;
    if (it != lits.end() && it->label == n.label) {
      f = n.child[static_cast<std::size_t>(it->sign)];
      ++it;
    } else {
      f = n.child[0];
    }
  }
  return f.is_top() && it == lits.end();
}

void TddStore::for_each(
    NodeRef f, const std::function<void(const SignedEdgeSet&)>& visit) const {
  check_owned(f);
  SignedEdgeSet path;
  std::function<void(NodeRef)> walk = [&](NodeRef g) {
    if (g.is_bottom()) return;
    if (g.is_top()) {
      visit(path);
      return;
    }
    const Node& n = node(g);
    walk(n.child[0]);
    path.positives.push_back(n.label);
    walk(n.child[1]);
    path.positives.pop_back();
    path.negatives.push_back(n.label);
    walk(n.child[2]);
    path.negatives.pop_back();
  };
  walk(f);
}

std::vector<SignedEdgeSet> TddStore::enumerate(NodeRef f) const {
  std::vector<SignedEdgeSet> out;
  for_each(f, [&](const SignedEdgeSet& s) { out.push_back(s); });
  return out;
}

WidthProfile TddStore::width_profile(NodeRef f) const {
  check_owned(f);
  WidthProfile profile;
  profile.per_label.assign(universe_ + 1, 0);
  auto order = detail::reachable(f, [&](NodeRef g) { return node(g).child; });
  for (auto index : order) ++profile.per_label[nodes_[index].label];
  for (auto c : profile.per_label) profile.width = std::max(profile.width, c);
  return profile;
}

std::size_t TddStore::size(NodeRef f) const {
  check_owned(f);
  return detail::reachable(f, [&](NodeRef g) { return node(g).child; }).size();
}

std::vector<std::string> TddStore::audit() const {
  std::vector<std::string> problems;
  std::unordered_map<Key, std::uint32_t, KeyHash> seen;
  for (std::uint32_t i = 2; i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    std::string where = "node " + std::to_string(i) + ": ";
    if (n.child[1].is_bottom() && n.child[2].is_bottom()) {
      problems.push_back(where + "POS and NEG children are both bottom");
    }
    if (n.label == 0 || n.label > universe_) {
      problems.push_back(where + "label out of range");
    }
    for (NodeRef c : n.child) {
      if (nodes_[c.index()].label <= n.label) {
        problems.push_back(where + "child label not greater than own label");
      }
    }
    Key key{n.label, n.child[0].bits(), n.child[1].bits(), n.child[2].bits()};
    if (!seen.emplace(key, i).second) {
      problems.push_back(where + "duplicate (label, zero, pos, neg)");
    }
  }
  if (seen.size() != unique_.size()) {
    problems.push_back("unique table size differs from node pool");
  }
  return problems;
}

void TddStore::write_dot(NodeRef f, std::ostream& out) const {
  check_owned(f);
  out << "digraph tdd {\n";
  out << "  t0 [shape=box,label=\"0\"];\n  t1 [shape=box,label=\"1\"];\n";
  auto name = [](NodeRef g) {
    if (g.is_bottom()) return std::string("t0");
    if (g.is_top()) return std::string("t1");
    return "n" + std::to_string(g.index());
  };
  static constexpr const char* kStyle[] = {"dashed", "solid", "bold"};
  auto order = detail::reachable(f, [&](NodeRef g) { return node(g).child; });
  for (auto index : order) {
    const Node& n = nodes_[index];
    NodeRef self = make_ref(index);
    out << "  // " << index << ' ' << n.label << ' ' << name(n.child[0]) << ' '
        << name(n.child[1]) << ' ' << name(n.child[2]) << '\n';
    out << "  " << name(self) << " [shape=circle,label=\"" << n.label
        << "\"];\n";
    for (std::size_t a = 0; a < 3; ++a) {
      out << "  " << name(self) << " -> " << name(n.child[a]) << " [style="
          << kStyle[a] << "];\n";
    }
  }
  if (f.is_terminal()) out << "  root -> " << name(f) << ";\n";
  out << "}\n";
}

}  // namespace ddpart
