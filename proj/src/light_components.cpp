#include "ddpart/light_components.hpp"

#include <algorithm>
#include <array>
#include <cstring>

namespace ddpart {

LightComponentSpec::LightComponentSpec(const Graph& g, const FrontierPlan& plan,
                                       Weight bound)
    : graph_(g), plan_(plan), bound_(bound) {
  if (bound == 0) throw UsageError("lower bound must be positive");
  if (plan.max_frontier + 2 > 255) {
    throw UsageError("frontier too large for component ids");
  }
  const Label m = g.edge_count();
  unseen_weight_.assign(m + 1, 0);
  for (Label i = m; i >= 1; --i) {
    unseen_weight_[i - 1] = unseen_weight_[i];
    for (Vertex x : plan.entering[i]) unseen_weight_[i - 1] += g.weight(x);
  }
}

std::optional<LightComponentSpec::State> LightComponentSpec::transition(
    const State& st, Label i, std::size_t branch) const {
  const Edge& e = graph_.edge(i);
  const auto& before = plan_.frontier[i - 1];

  // Working set: previous frontier plus newly entering endpoints.
  std::vector<Vertex> verts(before.begin(), before.end());
  std::vector<std::uint8_t> comp(st.comp.begin(), st.comp.end());
  for (Vertex x : plan_.entering[i]) {
    verts.push_back(x);
    comp.push_back(0);
  }
  auto slot = [&](Vertex x) {
    return static_cast<std::size_t>(
        std::find(verts.begin(), verts.end(), x) - verts.begin());
  };
  const std::size_t su = slot(e.u);
  const std::size_t sv = slot(e.v);

  State out;
  out.weight = st.weight;
  out.closed = st.closed;

  if (branch == 1) {
    if (st.closed) return std::nullopt;
    if (out.weight != bound_) {
      for (std::size_t s : {su, sv}) {
        if (comp[s] != 0) continue;
        Weight w = graph_.weight(verts[s]);
        if (w >= bound_ - out.weight) return std::nullopt;
        out.weight += w;
      }
    }
    const std::uint8_t cu = comp[su];
    const std::uint8_t cv = comp[sv];
    if (cu == 0 && cv == 0) {
      std::uint8_t fresh = *std::max_element(comp.begin(), comp.end()) + 1;
      comp[su] = comp[sv] = fresh;
    } else if (cu == 0) {
      comp[su] = cv;
    } else if (cv == 0) {
      comp[sv] = cu;
    } else if (cu != cv) {
      std::replace(comp.begin(), comp.end(), cv, cu);
    }
  }

  std::vector<bool> gone(verts.size(), false);
  for (Vertex x : plan_.leaving[i]) {
    std::size_t s = slot(x);
    gone[s] = true;
    std::uint8_t c = comp[s];
    if (c == 0) continue;
    bool block_remains = false;
    bool other_touched = false;
    for (std::size_t t = 0; t < verts.size(); ++t) {
      if (gone[t] || comp[t] == 0) continue;
      if (comp[t] == c) block_remains = true;
      else other_touched = true;
    }
    if (block_remains) continue;
    // The component through x is complete.
    if (out.closed || other_touched) return std::nullopt;
    out.closed = true;
  }

  // Project onto the next frontier with first-occurrence renumbering.
  const auto& after = plan_.frontier[i];
  out.comp.reserve(after.size());
  std::array<std::uint8_t, 256> rename{};
  std::uint8_t next_id = 0;
  for (Vertex x : after) {
    std::uint8_t c = comp[slot(x)];
    if (c != 0) {
      if (rename[c] == 0) rename[c] = ++next_id;
      c = rename[c];
    }
    out.comp.push_back(c);
  }
  if (out.closed) {
    out.weight = 0;
  } else if (out.weight != 0 && out.weight != bound_) {
    // Even touching every remaining vertex keeps the component light.
    Weight reachable = unseen_weight_[i];
    for (std::size_t j = 0; j < after.size(); ++j) {
      if (out.comp[j] == 0) reachable += graph_.weight(after[j]);
    }
    if (reachable < bound_ - out.weight) out.weight = bound_;
  }
  return out;
}

void LightComponentSpec::serialize(const State& st, std::string& key) const {
  key.append(reinterpret_cast<const char*>(st.comp.data()), st.comp.size());
  char buf[sizeof(Weight)];
  std::memcpy(buf, &st.weight, sizeof(Weight));
  key.append(buf, sizeof(Weight));
  key.push_back(st.closed ? '\1' : '\0');
}

SearchResult build_light_components(const Graph& g, Weight bound,
                                    ZddStore& store,
                                    const SearchOptions& options) {
  if (store.universe() != g.edge_count()) {
    throw UsageError("ZDD store universe does not match the edge count");
  }
  FrontierPlan plan = build_frontier_plan(g);
  LightComponentSpec spec(g, plan, bound);
  return run_search(g.edge_count(), spec, store, options);
}

std::vector<BigInt> bell_numbers(std::size_t n) {
  std::vector<BigInt> bell{1};
  std::vector<BigInt> row{1};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<BigInt> next{row.back()};
    for (const auto& x : row) next.push_back(next.back() + x);
    row = std::move(next);
    bell.push_back(row.front());
  }
  return bell;
}

}  // namespace ddpart
