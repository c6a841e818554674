// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "ddpart/cutset_tdd.hpp"
#include "ddpart/light_components.hpp"
#include "ddpart/oracle.hpp"
#include "ddpart/pipeline.hpp"
#include "ddpart/superset.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace ddpart;
using namespace ddpart::testing;

namespace {

constexpr std::size_t kRandomGraphs = 190;  // plus 17 fixed graphs
constexpr Weight kBounds[] = {2, 3, 5, 9};

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

const std::vector<Instance>& corpus() {
  static const auto c = make_corpus(kRandomGraphs);
  return c;
}

std::uint64_t pow6(std::size_t f) {
  std::uint64_t r = 1;
  while (f--) r *= 6;
  return r;
}

Outcome golden() {
  Outcome o;
  Graph g = weighted_cycle4();
  ZddStore z(4);
  std::vector<EdgeSet> two{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  LowerBoundFilter filter(g, 3, z);
  NodeRef b = filter.filter(z.from_sets(two));
  if (z.enumerate(filter.light_components()) != std::vector<EdgeSet>{{1}}) {
    o.fail("Z_S != {{1}}");
  }
  const SignedEdgeSet cut{{1}, {2, 3}};
  if (filter.tdd().enumerate(filter.signed_cutsets()) != std::vector{cut}) {
    o.fail("T_S+- != {{+1, -2, -3}}");
  }
  if (z.count(filter.supersets()) != 8) o.fail("|Z_S_up| != 8");
  if (as_set(z.enumerate(b)) != Family{{1, 2}, {1, 3}, {2, 3}}) {
    o.fail("wrong surviving partitions");
  }
  if (o.ok) o.detail = "Z_S={{1}} T_S+-={{+1,-2,-3}} |Z_S_up|=8 |Z_B|=3";
  return o;
}

Outcome light_components_vs_brute_force() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& inst : corpus()) {
    ZddStore z(inst.graph.edge_count());
    for (Weight bound : kBounds) {
      NodeRef zs = build_light_components(inst.graph, bound, z).root;
      if (as_set(z.enumerate(zs)) != brute_light_components(inst.graph, bound)) {
        o.fail(inst.name + " L=" + std::to_string(bound));
      }
      ++checked;
    }
  }
  if (o.ok) o.detail = std::to_string(corpus().size()) + " graphs, " +
                       std::to_string(checked) + " runs";
  return o;
}

Outcome cutsets_vs_brute_force() {
  Outcome o;
  std::size_t graphs = 0;
  for (const auto& inst : corpus()) {
    const Graph& g = inst.graph;
    const Label m = g.edge_count();
    TddStore t(m);
    ZddStore z(m);
    for (Weight bound : kBounds) {
      NodeRef zs = build_light_components(g, bound, z).root;
      if (t.count(build_cutset_tdd_subset(g, z, zs, t).root) != z.count(zs)) {
        o.fail(inst.name + " count L=" + std::to_string(bound));
      }
    }
    if (m > 10) continue;
    ++graphs;
    SignedFamily expected;
    for_each_signed_set(m, [&](const SignedEdgeSet& s) {
      if (check_minimal_cutset(g, s)) expected.insert(s);
    });
    if (as_set(t.enumerate(build_minimal_cutset_tdd(g, t).root)) != expected) {
      o.fail(inst.name + " standalone");
    }
    for (Weight bound : kBounds) {
      NodeRef zs = build_light_components(g, bound, z).root;
      NodeRef ts = build_cutset_tdd_subset(g, z, zs, t).root;
      SignedFamily signings;
      for (const auto& s : z.enumerate(zs)) signings.insert(signing(g, s));
      if (as_set(t.enumerate(ts)) != signings || t.count(ts) != z.count(zs)) {
        o.fail(inst.name + " subset L=" + std::to_string(bound));
      }
    }
  }
  if (o.ok) {
    o.detail = "counts on " + std::to_string(corpus().size()) + " graphs, sets on " +
               std::to_string(graphs) + " with m <= 10";
  }
  return o;
}

Outcome end_to_end() {
  Outcome o;
  std::mt19937_64 rng(97);
  std::size_t families = 0;
  for (const auto& inst : corpus()) {
    const Graph& g = inst.graph;
    const Label m = g.edge_count();
    ZddStore z(m);
    for (Weight bound : kBounds) {
      LowerBoundFilter filter(g, bound, z);
      std::vector<std::vector<EdgeSet>> inputs{z.enumerate(z.all_subsets())};
      for (int k = 0; k < 50; ++k) inputs.push_back(random_family(rng, m, 64));
      for (const auto& family : inputs) {
        NodeRef b = filter.filter(z.from_sets(family));
        if (as_set(z.enumerate(b)) != as_set(brute_force_filter(g, family, bound))) {
          o.fail(inst.name + " L=" + std::to_string(bound));
        }
        ++families;
      }
    }
  }
  if (o.ok) o.detail = std::to_string(families) + " families";
  return o;
}

Outcome width_bounds() {
  Outcome o;
  auto bell = bell_numbers(32);
  std::size_t violations = 0;
  std::string first;
  auto violate = [&](const std::string& where) {
    if (violations++ == 0) first = where;
  };
  for (const auto& inst : corpus()) {
    const Graph& g = inst.graph;
    auto plan = build_frontier_plan(g);
    ZddStore z(g.edge_count());
    TddStore t(g.edge_count());
    for (Weight bound : kBounds) {
      auto run = build_light_components(g, bound, z);
      for (Label i = 1; i <= g.edge_count(); ++i) {
        if (BigInt(run.stats.level_states[i]) >
            bell[plan.frontier[i - 1].size()] * bound) {
          violate(inst.name + " Z_S L=" + std::to_string(bound) + " level " +
                  std::to_string(i));
        }
      }
    }
    CutsetSpec spec(g, plan);
    run_search(g.edge_count(), spec, t, {},
               [&](Label i, std::span<const CutsetSpec::State> states) {
                 std::set<std::vector<std::uint8_t>> projection;
                 for (const auto& st : states) projection.insert(st.cells);
                 if (projection.size() > pow6(plan.frontier[i - 1].size())) {
                   violate(inst.name + " T_S level " + std::to_string(i));
                 }
               });
  }
  o.ok = violations == 0;
  o.detail = std::to_string(violations) + " violations" +
             (violations ? " (first: " + first + ")" : "");
  return o;
}

Outcome grid_4x6() {
  Outcome o;
  Graph g = grid_graph(4, 6);
  ZddStore z(g.edge_count());
  NodeRef a = z.all_subsets();
  NodeRef b = filter_lower_bound(a, g, 4, z);
  if (z.subtract(b, a) != kBottom) o.fail("Z_B not inside Z_A");

  std::mt19937_64 rng(24);
  std::uniform_int_distribution<std::uint64_t> pick;
  auto sample = [&](NodeRef f, bool light, const char* what) {
    BigInt total = z.count(f);
    for (int k = 0; k < 100 && total > 0; ++k) {
      BigInt rank = BigInt(pick(rng)) * BigInt(pick(rng)) % total;
      if (has_light_component(g, z.member_at(f, rank), 4) != light) o.fail(what);
    }
  };
  sample(z.subtract(a, b), true, "rejected member without a light component");
  sample(b, false, "kept member with a light component");
  if (!z.audit().empty()) o.fail("ZDD audit: " + z.audit().front());
  std::ostringstream d;
  d << "m=" << g.edge_count() << " |Z_B|=" << z.count(b);
  if (o.ok) o.detail = d.str();
  return o;
}

Outcome audits() {
  Outcome o;
  std::size_t stores = 0;
  for (const auto& inst : corpus()) {
    ZddStore z(inst.graph.edge_count());
    for (Weight bound : kBounds) {
      LowerBoundFilter filter(inst.graph, bound, z);
      filter.filter(z.all_subsets());
      auto zp = z.audit();
      auto tp = filter.tdd().audit();
      if (!zp.empty()) o.fail(inst.name + " ZDD: " + zp.front());
      if (!tp.empty()) o.fail(inst.name + " TDD: " + tp.front());
      stores += 2;
    }
  }
  if (o.ok) o.detail = std::to_string(stores) + " stores clean";
  return o;
}

struct Criterion {
  const char* name;
  double limit_seconds;
  std::function<Outcome()> check;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"golden-4-cycle", 1, golden},
      {"light-components-vs-brute-force", 120, light_components_vs_brute_force},
      {"cutsets-vs-brute-force", 120, cutsets_vs_brute_force},
      {"end-to-end-vs-brute-force", 300, end_to_end},
      {"width-bounds", 0, width_bounds},
      {"grid-4x6", 60, grid_4x6},
      {"audits", 0, audits},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (c.limit_seconds > 0 && seconds > c.limit_seconds) {
      o.fail("took longer than " + std::to_string(int(c.limit_seconds)) + " s");
    }
    std::printf("%s %s %.2fs %s\n", o.ok ? "PASS" : "FAIL", c.name, seconds,
                o.detail.c_str());
    std::fflush(stdout);
    failures += !o.ok;
  }
  return failures == 0 ? 0 : 1;
}
