#pragma once

#include <utility>
#include <vector>

#include "circstab/graph.hpp"

namespace circstab {

// Boolean square: u ~ v (u != v) iff the neighborhoods intersect. No loops.
Graph boolean_square(const Graph& g);

// Boolean-square edges removable by the two-sided witness condition,
// sorted as (u,v) with u < v.
std::vector<std::pair<int, int>> dispensable_edges(const Graph& g);

// Boolean square minus dispensable edges.
Graph cartesian_skeleton(const Graph& g);

}  // namespace circstab
