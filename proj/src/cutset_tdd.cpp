#include "ddpart/cutset_tdd.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

namespace ddpart {

namespace {

constexpr std::uint8_t color_bit(std::size_t branch) {
  return branch == static_cast<std::size_t>(Arc::kZero)  ? cell::kZero
         : branch == static_cast<std::size_t>(Arc::kPos) ? cell::kPos
                                                         : cell::kNeg;
}

/// Mutable copy of a state widened by the entering endpoints of one edge.
struct Workspace {
  std::vector<Vertex> verts;
  std::vector<std::uint8_t> cells;
  std::vector<std::uint64_t> pending;

  std::size_t slot(Vertex x) const {
    return static_cast<std::size_t>(
        std::find(verts.begin(), verts.end(), x) - verts.begin());
  }
  std::uint8_t colors(std::size_t s) const { return cells[s] & cell::kColors; }
  bool reserved(std::size_t s) const { return cells[s] & cell::kReserved; }

  /// Requires a positive edge at every vertex in `targets` later on. Fails
  /// when one of them already touches a zero edge.
  bool reserve(std::uint64_t targets) {
    for (; targets; targets &= targets - 1) {
      auto s = static_cast<std::size_t>(std::countr_zero(targets));
      if (cells[s] & cell::kZero) return false;
      if (!(cells[s] & cell::kPos)) cells[s] |= cell::kReserved;
    }
    return true;
  }

  void drop_pending(std::size_t s) {
    for (auto& mask : pending) mask &= ~(std::uint64_t{1} << s);
    pending[s] = 0;
  }
};

}  // namespace

CutsetSpec::CutsetSpec(const Graph& g, const FrontierPlan& plan,
                       const ZddStore* subset, NodeRef subset_root)
    : graph_(g), plan_(plan), subset_(subset), subset_root_(subset_root) {
  if (plan.max_frontier + 2 > 64) {
    throw UsageError("frontier of " + std::to_string(plan.max_frontier) +
                     " vertices exceeds the cutset state capacity");
  }
  if (subset_ != nullptr) {
    subset_->check_owned(subset_root_);
    if (subset_->universe() != g.edge_count()) {
      throw UsageError("Z_S universe does not match the edge count");
    }
  }
}

CutsetSpec::State CutsetSpec::initial() const {
  State st;
  st.zs = subset_ == nullptr ? kTop : subset_root_;
  return st;
}

std::optional<CutsetSpec::State> CutsetSpec::transition(
    const State& st, Label i, std::size_t branch) const {
  const auto arc = static_cast<Arc>(branch);
  State out;

  // Keep the positive part inside Z_S.
  out.zs = st.zs;
  if (subset_ != nullptr) {
    const bool at_edge = subset_->label(st.zs) == i;
    if (arc == Arc::kPos) {
      if (!at_edge) return std::nullopt;
      out.zs = subset_->hi(st.zs);
    } else if (at_edge) {
      out.zs = subset_->lo(st.zs);
    }
    if (out.zs.is_bottom()) return std::nullopt;
  }

  const Edge& e = graph_.edge(i);
  const auto& before = plan_.frontier[i - 1];
  Workspace w;
  w.verts.assign(before.begin(), before.end());
  w.cells = st.cells;
  w.pending = st.pending;
  for (Vertex x : plan_.entering[i]) {
    w.verts.push_back(x);
    w.cells.push_back(0);
    w.pending.push_back(0);
  }
  const std::size_t ends[2] = {w.slot(e.u), w.slot(e.v)};
  const std::uint8_t s = color_bit(branch);

  for (int k = 0; k < 2; ++k) {
    const std::size_t x = ends[k];
    const std::size_t other = ends[1 - k];
    // Condition 1: zero and positive never meet at a vertex.
    if (arc == Arc::kPos && (w.cells[x] & cell::kZero)) return std::nullopt;
    if (arc == Arc::kZero && (w.cells[x] & cell::kPos)) return std::nullopt;
    if (arc == Arc::kZero && w.colors(x) == cell::kNeg) {
      // x can no longer carry a positive edge, so its negative neighbours must.
      if (!w.reserve(w.pending[x])) return std::nullopt;
      w.drop_pending(x);
    }
    if (arc == Arc::kNeg && (w.cells[x] & cell::kZero)) {
      if (!w.reserve(std::uint64_t{1} << other)) return std::nullopt;
    }
    if (arc == Arc::kZero && w.reserved(x)) return std::nullopt;
    if (arc == Arc::kPos) w.cells[x] &= ~cell::kReserved;
    w.cells[x] |= s;
  }
  if (arc == Arc::kPos) {
    w.drop_pending(ends[0]);
    w.drop_pending(ends[1]);
  } else if (arc == Arc::kNeg && w.colors(ends[0]) == cell::kNeg &&
             w.colors(ends[1]) == cell::kNeg) {
    w.pending[ends[0]] |= std::uint64_t{1} << ends[1];
    w.pending[ends[1]] |= std::uint64_t{1} << ends[0];
  }

  for (Vertex v : plan_.leaving[i]) {
    const std::size_t x = w.slot(v);
    // x is leaving the frontier.
    if (w.reserved(x) && !(w.cells[x] & cell::kPos)) return std::nullopt;
    if (w.colors(x) == cell::kNeg) {
      if (!w.reserve(w.pending[x])) return std::nullopt;
    }
    w.drop_pending(x);
    w.cells[x] = 0;
  }

  const auto& after = plan_.frontier[i];
  std::vector<std::size_t> from(after.size());
  for (std::size_t j = 0; j < after.size(); ++j) from[j] = w.slot(after[j]);
  out.cells.resize(after.size());
  out.pending.assign(after.size(), 0);
  for (std::size_t j = 0; j < after.size(); ++j) {
    out.cells[j] = w.cells[from[j]];
    for (std::size_t k = 0; k < after.size(); ++k) {
      if (w.pending[from[j]] >> from[k] & 1) {
        out.pending[j] |= std::uint64_t{1} << k;
      }
    }
  }
  return out;
}

void CutsetSpec::serialize(const State& st, std::string& key) const {
  key.append(reinterpret_cast<const char*>(st.cells.data()), st.cells.size());
  for (std::uint64_t mask : st.pending) {
    char buf[sizeof mask];
    std::memcpy(buf, &mask, sizeof mask);
    key.append(buf, sizeof mask);
  }
  if (subset_ != nullptr) {
    std::uint64_t bits = st.zs.bits();
    char buf[sizeof bits];
    std::memcpy(buf, &bits, sizeof bits);
    key.append(buf, sizeof bits);
  }
}

SearchResult build_minimal_cutset_tdd(const Graph& g, TddStore& store,
                                      const SearchOptions& options) {
  if (store.universe() != g.edge_count()) {
    throw UsageError("TDD store universe does not match the edge count");
  }
  FrontierPlan plan = build_frontier_plan(g);
  CutsetSpec spec(g, plan);
  return run_search(g.edge_count(), spec, store, options);
}

SearchResult build_cutset_tdd_subset(const Graph& g, const ZddStore& zdd,
                                     NodeRef zs_root, TddStore& store,
                                     const SearchOptions& options) {
  if (store.universe() != g.edge_count() || zdd.universe() != g.edge_count()) {
    throw UsageError("store universes do not match the edge count");
  }
  if (zs_root.is_bottom()) return {kBottom, {}};
  FrontierPlan plan = build_frontier_plan(g);
  CutsetSpec spec(g, plan, &zdd, zs_root);
  return run_search(g.edge_count(), spec, store, options);
}

bool check_minimal_cutset(const Graph& g, const SignedEdgeSet& s) {
  const Label m = g.edge_count();
  std::vector<std::uint8_t> type(m + 1, cell::kZero);
  for (Label e : s.positives) {
    if (e == 0 || e > m) return false;
    type[e] = cell::kPos;
  }
  for (Label e : s.negatives) {
    if (e == 0 || e > m || type[e] == cell::kPos) return false;
    type[e] = cell::kNeg;
  }
  std::vector<std::uint8_t> seen(g.vertex_count() + 1, 0);
  for (Label e = 1; e <= m; ++e) {
    seen[g.edge(e).u] |= type[e];
    seen[g.edge(e).v] |= type[e];
  }
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    if ((seen[v] & cell::kZero) && (seen[v] & cell::kPos)) return false;
  }
  for (Label e : s.negatives) {
    if (!(seen[g.edge(e).u] & cell::kPos) && !(seen[g.edge(e).v] & cell::kPos)) {
      return false;
    }
  }
  return true;
}

SignedEdgeSet minimal_cutset_signing(const Graph& g, const EdgeSet& s) {
  std::vector<bool> in_set(g.edge_count() + 1, false);
  std::vector<bool> in_dom(g.vertex_count() + 1, false);
  for (Label e : s) {
    in_set[e] = true;
    in_dom[g.edge(e).u] = in_dom[g.edge(e).v] = true;
  }
  SignedEdgeSet out;
  for (Label e = 1; e <= g.edge_count(); ++e) {
    if (in_set[e]) {
      out.positives.push_back(e);
    } else if (in_dom[g.edge(e).u] || in_dom[g.edge(e).v]) {
      out.negatives.push_back(e);
    }
  }
  return out;
}

}  // namespace ddpart
