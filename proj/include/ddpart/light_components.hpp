#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ddpart/frontier.hpp"
#include "ddpart/frontier_search.hpp"
#include "ddpart/graph.hpp"
#include "ddpart/zdd_store.hpp"

namespace ddpart {

/// Search for connected edge sets (at least one edge) of weight below a bound.
class LightComponentSpec {
 public:
  static constexpr std::size_t kArity = 2;

  struct State {
    /// One entry per frontier vertex: 0 = no selected edge yet, otherwise a
    /// block id renumbered in first-occurrence order.
    std::vector<std::uint8_t> comp;
    /// Weight of all touched vertices, always below the bound. Set to the
    /// bound itself once no completion can reach it (weight is then moot).
    Weight weight = 0;
    /// A finished component has left the frontier.
    bool closed = false;
  };

  LightComponentSpec(const Graph& g, const FrontierPlan& plan, Weight bound);

  State initial() const { return {}; }
  std::optional<State> transition(const State& st, Label i,
                                  std::size_t branch) const;
  bool finalize(const State& st) const { return st.closed; }
  void serialize(const State& st, std::string& key) const;

 private:
  const Graph& graph_;
  const FrontierPlan& plan_;
  Weight bound_;
  /// unseen_weight_[i]: total weight of vertices whose first edge is after i.
  std::vector<Weight> unseen_weight_;
};

/// ZDD of { S ⊆ E : S ≠ ∅, (dom(S), S) connected, weight(dom(S)) < bound }.
SearchResult build_light_components(const Graph& g, Weight bound,
                                    ZddStore& store,
                                    const SearchOptions& options = {});

/// Bell numbers B_0..B_n via the Bell triangle.
std::vector<BigInt> bell_numbers(std::size_t n);

}  // namespace ddpart
