#pragma once

#include <cstdint>
#include <vector>

#include "circstab/abelian.hpp"
#include "circstab/graph.hpp"
#include "circstab/group_order.hpp"
#include "circstab/perm.hpp"

namespace circstab {

// Automorphism group of a graph: generators plus exact order from a base
// and strong generating set. transversal_sizes multiply to the order.
struct PermGroup {
    int degree = 0;
    std::vector<Permutation> generators;
    std::vector<int> base;
    std::vector<int> transversal_sizes;
    GroupOrder order;
};

// Full automorphism group via equitable-partition refinement with
// backtracking. Deterministic for a given graph. Throws SizeLimitError
// above the vertex cap.
PermGroup automorphism_group(const Graph& g, int cap = 128);

// Same, restricted to automorphisms preserving each color class setwise.
PermGroup automorphism_group(const Graph& g, const std::vector<int>& colors, int cap = 128);

// Exact order of the group generated by the given permutations
// (Schreier-Sims). All permutations must share a degree.
GroupOrder group_order(const std::vector<Permutation>& gens);

// Canonical certificate: equal iff the graphs are isomorphic.
std::vector<uint64_t> canonical_certificate(const Graph& g, int cap = 64);

std::vector<std::vector<int>> vertex_orbits(int degree, const std::vector<Permutation>& gens);
std::vector<std::vector<std::pair<int, int>>> edge_orbits(const Graph& g,
                                                          const std::vector<Permutation>& gens);
// Arcs are ordered adjacent pairs (u,v).
std::vector<std::vector<std::pair<int, int>>> arc_orbits(const Graph& g,
                                                         const std::vector<Permutation>& gens);

// Both throw InputError on edgeless graphs (transitivity undefined).
bool is_arc_transitive(const Graph& g, const PermGroup& aut);
bool is_edge_transitive(const Graph& g, const PermGroup& aut);
bool is_arc_transitive(const Graph& g, int cap = 128);
bool is_edge_transitive(const Graph& g, int cap = 128);

// Sufficient test: Aut(G,S) transitive on S forces arc-transitivity
// of Cay(G,S). One-directional.
bool sufficient_arc_transitivity(const AbelianGroup& g, const std::vector<int>& s,
                                 int group_cap = 64);

// Normality test: |Aut(Cay(G,S))| == |G| * |Aut(G,S)|.
bool is_normal_cayley(const AbelianGroup& g, const std::vector<int>& s, int vertex_cap = 128,
                      int group_cap = 64);

}  // namespace circstab
