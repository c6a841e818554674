#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ddpart/frontier_search.hpp"
#include "ddpart/graph.hpp"
#include "ddpart/tdd_store.hpp"
#include "ddpart/zdd_store.hpp"

namespace ddpart {

/// Determinizes a TDD into the ZDD of edge sets compatible with at least one
/// of its signed sets (all positives present, all negatives absent).
///
/// A state is the set of TDD nodes still consistent with the decisions so
/// far. Once any signed set is fully satisfied the state collapses to the
/// absorbing `matched` state, which accepts every continuation.
class LiftSpec {
 public:
  static constexpr std::size_t kArity = 2;

  struct State {
    std::vector<NodeRef> live;  // sorted, never contains a terminal
    bool matched = false;
  };

  LiftSpec(const TddStore& tdd, NodeRef root);

  State initial() const;
  std::optional<State> transition(const State& st, Label i,
                                  std::size_t branch) const;
  bool finalize(const State& st) const { return st.matched; }
  void serialize(const State& st, std::string& key) const;

 private:
  const TddStore& tdd_;
  NodeRef root_;
};

/// { E' ⊆ E : ∃ S± ∈ t, positives ⊆ E', negatives ∩ E' = ∅ }.
SearchResult lift_to_supersets(const TddStore& tdd, NodeRef t, ZddStore& zdd,
                               const SearchOptions& options = {});

/// Z_v: all edge sets avoiding every edge incident to v.
NodeRef build_isolated_vertex_family(const Graph& g, Vertex v, ZddStore& zdd);

/// Lift of `t` united with Z_v for every vertex lighter than `bound`.
NodeRef assemble_sup(const Graph& g, const TddStore& tdd, NodeRef t,
                     Weight bound, ZddStore& zdd,
                     const SearchOptions& options = {});

}  // namespace ddpart
