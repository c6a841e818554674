#include <doctest.h>

#include "ddpart/frontier.hpp"
#include "ddpart/frontier_search.hpp"
#include "support/corpus.hpp"

using namespace ddpart;
using namespace ddpart::testing;

namespace {

struct AcceptAll {
  static constexpr std::size_t kArity = 2;
  struct State {};
  State initial() const { return {}; }
  std::optional<State> transition(const State&, Label, std::size_t) const {
    return State{};
  }
  bool finalize(const State&) const { return true; }
  void serialize(const State&, std::string&) const {}
};

struct RejectAll : AcceptAll {
  bool finalize(const State&) const { return false; }
};

/// Sets of even size; the parity is the whole state.
struct EvenSize {
  static constexpr std::size_t kArity = 2;
  struct State {
    bool odd = false;
  };
  State initial() const { return {}; }
  std::optional<State> transition(const State& s, Label, std::size_t b) const {
    return State{s.odd != (b == 1)};
  }
  bool finalize(const State& s) const { return !s.odd; }
  void serialize(const State& s, std::string& key) const {
    key.push_back(s.odd ? '1' : '0');
  }
};

}  // namespace

TEST_CASE("frontier of a path") {
  Graph g = path_graph(4);
  auto plan = build_frontier_plan(g);
  CHECK(plan.frontier[0].empty());
  CHECK(plan.frontier[1] == std::vector<Vertex>{2});
  CHECK(plan.frontier[2] == std::vector<Vertex>{3});
  CHECK(plan.frontier[3].empty());
  CHECK(plan.max_frontier == 1);
  CHECK(plan.entering[1] == std::vector<Vertex>{1, 2});
  CHECK(plan.leaving[1] == std::vector<Vertex>{1});
  CHECK(plan.leaving[3] == std::vector<Vertex>{3, 4});
}

TEST_CASE("frontier of a single edge") {
  Graph g(2);
  g.add_edge(1, 2);
  auto plan = build_frontier_plan(g);
  CHECK(plan.frontier[0].empty());
  CHECK(plan.frontier[1].empty());
  CHECK(plan.max_frontier == 0);
}

TEST_CASE("frontier of the 4-cycle") {
  Graph g = weighted_cycle4();
  auto plan = build_frontier_plan(g);
  CHECK(plan.frontier[1] == std::vector<Vertex>{1, 2});
  CHECK(plan.frontier[2] == std::vector<Vertex>{1, 3});
  CHECK(plan.frontier[3] == std::vector<Vertex>{3, 4});
  CHECK(plan.frontier[4].empty());
  CHECK(plan.max_frontier == 2);
  CHECK(plan.position(2, 3) == 1);
  CHECK(plan.position(2, 2) == FrontierPlan::npos);
}

TEST_CASE("frontier membership matches its definition on the corpus") {
  for (const auto& inst : make_corpus(40)) {
    const Graph& g = inst.graph;
    auto plan = build_frontier_plan(g);
    const Label m = g.edge_count();
    REQUIRE(plan.frontier[0].empty());
    REQUIRE(plan.frontier[m].empty());
    for (Label i = 0; i <= m; ++i) {
      for (Vertex v = 1; v <= g.vertex_count(); ++v) {
        bool early = false;
        bool late = false;
        for (Label j = 1; j <= m; ++j) {
          bool touches = g.edge(j).u == v || g.edge(j).v == v;
          if (touches && j <= i) early = true;
          if (touches && j > i) late = true;
        }
        REQUIRE((plan.position(i, v) != FrontierPlan::npos) == (early && late));
      }
    }
  }
}

TEST_CASE("run_search with trivial specs") {
  ZddStore z(6);
  auto all = run_search(6, AcceptAll{}, z);
  CHECK(all.root == z.all_subsets());
  for (Label i = 1; i <= 6; ++i) CHECK(merge_table_stats(all).level_states[i] == 1);
  CHECK(all.stats.peak == 1);

  CHECK(run_search(6, RejectAll{}, z).root == kBottom);
  CHECK(run_search(0, AcceptAll{}, z).root == kTop);
  CHECK(run_search(0, RejectAll{}, z).root == kBottom);
}

TEST_CASE("merging is sound and deterministic") {
  ZddStore z(8);
  auto merged = run_search(8, EvenSize{}, z);
  SearchOptions unmerged;
  unmerged.merge_states = false;
  auto expanded = run_search(8, EvenSize{}, z, unmerged);
  CHECK(merged.root == expanded.root);
  CHECK(z.count(merged.root) == 128);
  CHECK(merged.stats.peak == 2);
  CHECK(expanded.stats.level_states[8] == 128);

  ZddStore other(8);
  auto again = run_search(8, EvenSize{}, other);
  CHECK(other.size(again.root) == z.size(merged.root));
  CHECK(other.enumerate(again.root) == z.enumerate(merged.root));
}

TEST_CASE("state limit raises a resource error") {
  ZddStore z(12);
  SearchOptions options;
  options.merge_states = false;
  options.state_limit = 100;
  CHECK_THROWS_AS(run_search(12, EvenSize{}, z, options), ResourceError);
}
