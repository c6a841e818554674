#include <doctest.h>

#include "ddpart/cutset_tdd.hpp"
#include "ddpart/light_components.hpp"
#include "ddpart/superset.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace ddpart;
using namespace ddpart::testing;

TEST_CASE("lift of a single signed set") {
  TddStore t(4);
  ZddStore z(4);
  std::vector<SignedEdgeSet> sets{{{1}, {2, 3}}};
  NodeRef lifted = lift_to_supersets(t, t.from_signed_sets(sets), z).root;
  CHECK(as_set(z.enumerate(lifted)) == Family{{1}, {1, 4}});
}

TEST_CASE("lift of the empty signed set is every edge set") {
  TddStore t(5);
  ZddStore z(5);
  std::vector<SignedEdgeSet> sets{{}};
  CHECK(lift_to_supersets(t, t.from_signed_sets(sets), z).root == z.all_subsets());
  CHECK(lift_to_supersets(t, kBottom, z).root == kBottom);
}

TEST_CASE("lift agrees with brute force on random TDDs") {
  std::mt19937_64 rng(77);
  for (int round = 0; round < 200; ++round) {
    Label m = 1 + round % 10;
    auto sets = random_signed_family(rng, m, 6);
    TddStore t(m);
    ZddStore z(m);
    NodeRef lifted = lift_to_supersets(t, t.from_signed_sets(sets), z).root;
    INFO("round " << round);
    REQUIRE(as_set(z.enumerate(lifted)) == brute_lift(sets, m));
    REQUIRE(z.audit().empty());
  }
}

TEST_CASE("isolated vertex family") {
  Graph g = weighted_cycle4();
  ZddStore z(4);
  NodeRef zv = build_isolated_vertex_family(g, 1, z);
  CHECK(as_set(z.enumerate(zv)) == Family{{}, {2}, {4}, {2, 4}});

  for (const auto& inst : make_corpus(20)) {
    const Graph& h = inst.graph;
    ZddStore zz(h.edge_count());
    for (Vertex v = 1; v <= h.vertex_count(); ++v) {
      NodeRef f = build_isolated_vertex_family(h, v, zz);
      auto deg = h.incident_edges(v).size();
      REQUIRE(zz.count(f) == BigInt(1) << (h.edge_count() - deg));
    }
  }
}

TEST_CASE("assembled superset family on the 4-cycle example") {
  Graph g = weighted_cycle4();
  ZddStore z(4);
  TddStore t(4);
  NodeRef zs = build_light_components(g, 3, z).root;
  NodeRef ts = build_cutset_tdd_subset(g, z, zs, t).root;
  NodeRef sup = assemble_sup(g, t, ts, 3, z);
  CHECK(as_set(z.enumerate(sup)) ==
        Family{{}, {1}, {2}, {3}, {4}, {1, 4}, {2, 4}, {3, 4}});

  // With L = 1 nothing is light.
  NodeRef none = build_light_components(g, 1, z).root;
  CHECK(assemble_sup(g, t, build_cutset_tdd_subset(g, z, none, t).root, 1, z) ==
        kBottom);
}

TEST_CASE("superset membership means a light component exists") {
  for (const auto& inst : make_corpus(40, 12)) {
    const Graph& g = inst.graph;
    const Label m = g.edge_count();
    ZddStore z(m);
    TddStore t(m);
    for (Weight bound : {2, 3, 5, 9}) {
      NodeRef zs = build_light_components(g, bound, z).root;
      NodeRef ts = build_cutset_tdd_subset(g, z, zs, t).root;
      NodeRef sup = assemble_sup(g, t, ts, bound, z);
      INFO(inst.name << " L=" << bound);
      for (const auto& s : power_set(m)) {
        REQUIRE(z.contains(sup, s) == light_component_by_dfs(g, s, bound));
      }
      REQUIRE(z.unite(sup, sup) == sup);
      REQUIRE(z.unite(sup, zs) == sup);
    }
  }
}
