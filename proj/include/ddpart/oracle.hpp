#pragma once

#include <vector>

#include "ddpart/graph.hpp"

namespace ddpart {

/// True when some connected component of (V, edges), isolated vertices
/// included, weighs less than `bound`.
bool has_light_component(const Graph& g, const EdgeSet& edges, Weight bound);

/// Members of `family` whose every component weighs at least `bound`,
/// found by a union-find scan of each member. Input order is kept and
/// duplicates are dropped.
std::vector<EdgeSet> brute_force_filter(const Graph& g,
                                        const std::vector<EdgeSet>& family,
                                        Weight bound);

}  // namespace ddpart
