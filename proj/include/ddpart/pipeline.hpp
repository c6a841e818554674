#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ddpart/graph.hpp"
#include "ddpart/tdd_store.hpp"
#include "ddpart/zdd_store.hpp"

namespace ddpart {

using Rational = boost::multiprecision::cpp_rational;

/// One row of the per-stage report: time, diagram size and cardinality.
struct StageReport {
  std::string stage;
  double seconds = 0;
  std::size_t nodes = 0;
  std::optional<BigInt> cardinality;
};

inline constexpr std::size_t kDefaultNodeBudget = 10'000'000;

/// Keeps exactly the members of a family whose connected components (isolated
/// vertices included) all weigh at least `bound`:
///
///   1. Z_S    connected edge sets lighter than the bound,
///   2. T_S±   their minimal-cutset signings,
///   3. Z_S↑   edge sets containing a light component, plus light isolated
///             vertices,
///   4. Z_A ∖ Z_S↑.
///
/// Stages 1-3 depend only on (graph, bound); they are built once and reused
/// for every family passed to filter().
class LowerBoundFilter {
 public:
  LowerBoundFilter(const Graph& g, Weight bound, ZddStore& zdd,
                   std::size_t node_budget = kDefaultNodeBudget);

  NodeRef light_components();
  NodeRef signed_cutsets();
  NodeRef supersets();
  NodeRef filter(NodeRef family);

  const TddStore& tdd() const { return tdd_; }
  const std::vector<StageReport>& reports() const { return reports_; }

 private:
  template <class Build>
  NodeRef run_stage(const char* name, Build&& build);

  const Graph& graph_;
  Weight bound_;
  ZddStore& zdd_;
  TddStore tdd_;
  std::size_t budget_;
  std::optional<NodeRef> zs_;
  std::optional<NodeRef> ts_;
  std::optional<NodeRef> sup_;
  std::vector<StageReport> reports_;
};

/// Z_B for a single family; see LowerBoundFilter.
NodeRef filter_lower_bound(NodeRef family, const Graph& g, Weight bound,
                           ZddStore& zdd);

/// L(k, r) = P / (r (k - 1) + 1), exactly and floored.
struct RatioBound {
  Rational exact;
  Weight floor = 0;
};

RatioBound lower_bound_from_ratio(Weight total, std::uint64_t components,
                                  const Rational& ratio);

/// Parses a plain decimal such as "1.25" exactly. Throws InputError.
Rational parse_decimal(std::string_view text);

/// Header plus one row per stage: `stage time_s nodes cardinality`.
std::string emit_stats(const std::vector<StageReport>& reports);

}  // namespace ddpart
