#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ddpart/frontier.hpp"
#include "ddpart/frontier_search.hpp"
#include "ddpart/graph.hpp"
#include "ddpart/tdd_store.hpp"
#include "ddpart/zdd_store.hpp"

namespace ddpart {

/// Bits of a per-vertex cutset cell.
namespace cell {
inline constexpr std::uint8_t kZero = 1;      // a zero edge is incident
inline constexpr std::uint8_t kPos = 2;       // a positive edge is incident
inline constexpr std::uint8_t kNeg = 4;       // a negative edge is incident
inline constexpr std::uint8_t kColors = 7;
inline constexpr std::uint8_t kReserved = 8;  // a positive edge must follow
}  // namespace cell

/// Search for signed subgraphs with minimal cutset, i.e. signed edge sets
/// where (1) no vertex touches both a zero and a positive edge and (2) every
/// negative edge has an endpoint touching a positive edge.
///
/// With a Z_S diagram attached, the positive part is additionally walked
/// through that ZDD so only signed sets with abs(S+) in the family survive.
class CutsetSpec {
 public:
  static constexpr std::size_t kArity = 3;

  struct State {
    /// Colors and reservation per frontier vertex.
    std::vector<std::uint8_t> cells;
    /// pending[j] has bit k set when frontier vertices j and k are joined by
    /// a processed negative edge neither of whose endpoints has a positive
    /// edge yet.
    std::vector<std::uint64_t> pending;
    NodeRef zs = kTop;
  };

  /// `subset` may be null for the standalone family.
  CutsetSpec(const Graph& g, const FrontierPlan& plan,
             const ZddStore* subset = nullptr, NodeRef subset_root = kTop);

  State initial() const;
  std::optional<State> transition(const State& st, Label i,
                                  std::size_t branch) const;
  bool finalize(const State& st) const {
    return subset_ == nullptr || st.zs.is_top();
  }
  void serialize(const State& st, std::string& key) const;

 private:
  const Graph& graph_;
  const FrontierPlan& plan_;
  const ZddStore* subset_;
  NodeRef subset_root_;
};

/// TDD of every signed subgraph with minimal cutset, the empty one included.
SearchResult build_minimal_cutset_tdd(const Graph& g, TddStore& store,
                                      const SearchOptions& options = {});

/// T_{S±}: the minimal-cutset signing of each member of `zs_root`.
SearchResult build_cutset_tdd_subset(const Graph& g, const ZddStore& zdd,
                                     NodeRef zs_root, TddStore& store,
                                     const SearchOptions& options = {});

/// Direct check of the two minimal-cutset conditions.
bool check_minimal_cutset(const Graph& g, const SignedEdgeSet& s);

/// The minimal-cutset signing of a connected edge set S: +e for e ∈ S and
/// -e for every other edge touching dom(S).
SignedEdgeSet minimal_cutset_signing(const Graph& g, const EdgeSet& s);

}  // namespace ddpart
