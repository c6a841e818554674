#pragma once

#include <array>
#include <concepts>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ddpart/tdd_store.hpp"
#include "ddpart/zdd_store.hpp"

namespace ddpart {

/// What a frontier-based search needs from a problem definition.
///
/// States live between edges: the state handed to transition(st, i, b) is the
/// configuration before edge i, and the returned state is the one before
/// edge i + 1 (or the final state when i == m). Returning nullopt prunes the
/// branch to bottom. Two states whose serialized keys match at the same
/// level are merged, so `serialize` must be canonical.
///
/// For 2-way searches branch 0 leaves the edge out and branch 1 takes it.
/// For 3-way searches the branches follow Arc: ZERO, POS, NEG.
template <class Spec>
concept SearchSpec = requires(const Spec& spec,
                              const typename Spec::State& state, Label i,
                              std::size_t branch, std::string& key) {
  typename Spec::State;
  { Spec::kArity } -> std::convertible_to<std::size_t>;
  { spec.initial() } -> std::same_as<typename Spec::State>;
  {
    spec.transition(state, i, branch)
  } -> std::same_as<std::optional<typename Spec::State>>;
  { spec.finalize(state) } -> std::same_as<bool>;
  spec.serialize(state, key);
};

struct SearchOptions {
  /// Disabling merging expands every path separately; only for testing.
  bool merge_states = true;
  /// Total states the run may create before throwing ResourceError.
  std::size_t state_limit = static_cast<std::size_t>(-1);
};

struct SearchStats {
  /// level_states[i] = distinct states expanded at level i (1..m).
  std::vector<std::size_t> level_states;
  std::size_t peak = 0;
  std::size_t total = 0;
};

struct SearchResult {
  NodeRef root = kBottom;
  SearchStats stats;
};

/// Per-level state counts of a completed run.
inline const SearchStats& merge_table_stats(const SearchResult& run) {
  return run.stats;
}

namespace detail {

inline NodeRef make_node(ZddStore& store, Label label,
                         const std::array<NodeRef, 2>& c) {
  return store.get_node(label, c[0], c[1]);
}

inline NodeRef make_node(TddStore& store, Label label,
                         const std::array<NodeRef, 3>& c) {
  return store.get_node(label, c[0], c[1], c[2]);
}

struct NoObserver {
  template <class State>
  void operator()(Label, std::span<const State>) const {}
};

}  // namespace detail

/// Breadth-first top-down construction over edges 1..m.
///
/// Level i is expanded completely before level i + 1; the diagram is then
/// assembled bottom-up through the store's unique table. `observe(i, states)`
/// sees the deduplicated states of every level before they are expanded.
template <SearchSpec Spec, class Store, class Observer = detail::NoObserver>
SearchResult run_search(Label m, const Spec& spec, Store& store,
                        const SearchOptions& options = {},
                        Observer&& observe = {}) {
  using State = typename Spec::State;
  constexpr std::size_t kArity = Spec::kArity;
  // Negative links point at terminals, others index the next level.
  constexpr std::int64_t kToBottom = -1;
  constexpr std::int64_t kToTop = -2;

  SearchResult result;
  result.stats.level_states.assign(m + 1, 0);
  if (m == 0) {
    result.root = spec.finalize(spec.initial()) ? kTop : kBottom;
    return result;
  }

  std::vector<std::vector<std::array<std::int64_t, kArity>>> links(m + 1);
  std::vector<State> current;
  current.push_back(spec.initial());
  std::string key;

  for (Label i = 1; i <= m && !current.empty(); ++i) {
    result.stats.level_states[i] = current.size();
    result.stats.peak = std::max(result.stats.peak, current.size());
    result.stats.total += current.size();
    observe(i, std::span<const State>(current));

    std::vector<State> next;
    std::unordered_map<std::string, std::int64_t> table;
    auto& level_links = links[i];
    level_links.resize(current.size());
    for (std::size_t s = 0; s < current.size(); ++s) {
      for (std::size_t b = 0; b < kArity; ++b) {
        std::optional<State> child = spec.transition(current[s], i, b);
        std::int64_t link = kToBottom;
        if (child && i == m) {
          link = spec.finalize(*child) ? kToTop : kToBottom;
        } else if (child) {
          if (options.merge_states) {
            key.clear();
            spec.serialize(*child, key);
            auto [it, inserted] = table.try_emplace(
                key, static_cast<std::int64_t>(next.size()));
            if (inserted) next.push_back(std::move(*child));
            link = it->second;
          } else {
            link = static_cast<std::int64_t>(next.size());
            next.push_back(std::move(*child));
          }
          if (result.stats.total + next.size() > options.state_limit) {
            throw ResourceError("search state limit of " +
                                std::to_string(options.state_limit) +
                                " exceeded at level " + std::to_string(i));
          }
        }
        level_links[s][b] = link;
      }
    }
    current = std::move(next);
  }

  std::vector<NodeRef> below;
  std::vector<NodeRef> here;
  for (Label i = m; i >= 1; --i) {
    here.assign(links[i].size(), kBottom);
    for (std::size_t s = 0; s < links[i].size(); ++s) {
      std::array<NodeRef, kArity> children;
      for (std::size_t b = 0; b < kArity; ++b) {
        std::int64_t link = links[i][s][b];
        children[b] = link == kToTop      ? kTop
                      : link == kToBottom ? kBottom
                                          : below[static_cast<std::size_t>(link)];
      }
      here[s] = detail::make_node(store, i, children);
    }
    std::swap(below, here);
    links[i].clear();
    links[i].shrink_to_fit();
  }
  result.root = below.empty() ? kBottom : below.front();
  return result;
}

}  // namespace ddpart
