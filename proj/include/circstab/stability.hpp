#pragma once

#include <optional>
#include <string>
#include <vector>

#include "circstab/autgroup.hpp"
#include "circstab/graph.hpp"

namespace circstab {

enum class Stability { stable, trivially_unstable, nontrivially_unstable };

std::string to_string(Stability s);

enum class TrivialReason { disconnected, bipartite, not_vertex_determining };

std::string to_string(TrivialReason r);

// Two-fold automorphism witness: distinct alpha, beta with
// u ~ v  <=>  alpha(u) ~ beta(v)  for all u, v.
struct TFWitness {
    Permutation alpha;
    Permutation beta;
};

struct StabilityVerdict {
    Stability status = Stability::stable;
    bool connected = false;
    bool bipartite = false;
    bool vertex_determining = false;
    std::vector<TrivialReason> trivial_reasons;  // populated even for stable graphs
    GroupOrder aut_order;
    GroupOrder dcover_aut_order;
    std::optional<TFWitness> tf_witness;

    bool unstable() const { return status != Stability::stable; }
};

// Order test: |Aut(D(G))| == 2 |Aut(G)|.
bool is_stable(const Graph& g, int cap = 128);

StabilityVerdict classify(const Graph& g, int cap = 128, bool extract_witness = true);

// Returns a verified witness iff one exists, extracted from the
// layer-preserving automorphisms of the double cover. For connected
// non-bipartite graphs existence is equivalent to instability; some
// disconnected unstable graphs (two disjoint triangles, say) admit none.
std::optional<TFWitness> tf_witness(const Graph& g, int cap = 128);

bool verify_tf_pair(const Graph& g, const Permutation& alpha, const Permutation& beta);

}  // namespace circstab
