#include "ddpart/superset.hpp"

#include <algorithm>
#include <cstring>

namespace ddpart {

LiftSpec::LiftSpec(const TddStore& tdd, NodeRef root) : tdd_(tdd), root_(root) {
  tdd_.check_owned(root_);
}

LiftSpec::State LiftSpec::initial() const {
  State st;
  if (root_.is_top()) {
    st.matched = true;
  } else if (!root_.is_bottom()) {
    st.live.push_back(root_);
  }
  return st;
}

std::optional<LiftSpec::State> LiftSpec::transition(const State& st, Label i,
                                                    std::size_t branch) const {
  if (st.matched) return st;
  State out;
  // Taking e_i is compatible with POS and ZERO, leaving it out with NEG and
  // ZERO. Nodes labeled above i skip e_i and stay live on both branches.
  const Arc signed_arc = branch == 1 ? Arc::kPos : Arc::kNeg;
  auto add = [&](NodeRef t) {
    if (t.is_top()) {
      out.matched = true;
    } else if (!t.is_bottom()) {
      out.live.push_back(t);
    }
  };
  for (NodeRef t : st.live) {
    if (tdd_.label(t) == i) {
      add(tdd_.child(t, signed_arc));
      add(tdd_.zero(t));
    } else {
      add(t);
    }
    if (out.matched) break;
  }
  if (out.matched) {
    out.live.clear();
    return out;
  }
  if (out.live.empty()) return std::nullopt;
  std::sort(out.live.begin(), out.live.end());
  out.live.erase(std::unique(out.live.begin(), out.live.end()), out.live.end());
  return out;
}

void LiftSpec::serialize(const State& st, std::string& key) const {
  key.push_back(st.matched ? '\1' : '\0');
  for (NodeRef t : st.live) {
    std::uint32_t index = t.index();
    char buf[sizeof index];
    std::memcpy(buf, &index, sizeof index);
    key.append(buf, sizeof index);
  }
}

SearchResult lift_to_supersets(const TddStore& tdd, NodeRef t, ZddStore& zdd,
                               const SearchOptions& options) {
  if (tdd.universe() != zdd.universe()) {
    throw UsageError("TDD and ZDD universes differ");
  }
  if (t.is_bottom()) return {kBottom, {}};
  LiftSpec spec(tdd, t);
  return run_search(zdd.universe(), spec, zdd, options);
}

NodeRef build_isolated_vertex_family(const Graph& g, Vertex v, ZddStore& zdd) {
  if (zdd.universe() != g.edge_count()) {
    throw UsageError("ZDD store universe does not match the edge count");
  }
  if (v == 0 || v > g.vertex_count()) {
    throw UsageError("vertex " + std::to_string(v) + " outside 1.." +
                     std::to_string(g.vertex_count()));
  }
  NodeRef f = kTop;
  for (Label e = g.edge_count(); e >= 1; --e) {
    const Edge& edge = g.edge(e);
    if (edge.u != v && edge.v != v) f = zdd.get_node(e, f, f);
  }
  return f;
}

NodeRef assemble_sup(const Graph& g, const TddStore& tdd, NodeRef t,
                     Weight bound, ZddStore& zdd,
                     const SearchOptions& options) {
  NodeRef sup = lift_to_supersets(tdd, t, zdd, options).root;
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    if (g.weight(v) < bound) {
      sup = zdd.unite(sup, build_isolated_vertex_family(g, v, zdd));
    }
  }
  return sup;
}

}  // namespace ddpart
