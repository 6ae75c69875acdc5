#pragma once

#include <optional>
#include <string>
#include <vector>

#include "circstab/abelian.hpp"
#include "circstab/graph.hpp"
#include "circstab/perm.hpp"

namespace circstab {

enum class CompatMethod { matrix_search, cayley_search, certificate };

std::string to_string(CompatMethod m);

// Result of a compatible-permutation search. compatible=false is definitive
// only when search_exhausted is set; a hit node limit leaves both false
// (inconclusive).
struct CompatibilityResult {
    bool compatible = false;
    bool search_exhausted = false;
    std::optional<Permutation> witness;
    CompatMethod method = CompatMethod::matrix_search;
    long long nodes_explored = 0;

    bool conclusive() const { return compatible || search_exhausted; }
};

// Backtracking search for a nonidentity sigma with sigma(x) not in N(x) and
// sigma(y) in N(x) <=> sigma(x) in N(y) for all x,y. Witnesses are
// re-verified before being returned.
CompatibilityResult compatible_matrix_search(const Graph& g, long long node_limit = 10000000);

// Same semantics in additive Cayley terms: sigma(x)-x not in S and
// sigma(y)-x in S <=> sigma(x)-y in S. Group-automorphism candidates are
// tried before the general search.
CompatibilityResult compatible_cayley_search(const AbelianGroup& g, const std::vector<int>& s,
                                             long long node_limit = 10000000);

// Verifier for the thm3 certificate family at parameters (l, m):
// t = crt(-1 mod l, 1 mod m), S = {1,-1,t,-t} in Z_{lm}.
struct Thm3Certificate {
    int l = 0, m = 0, n = 0, t = 0;
    std::vector<int> s;

    bool claim1_nonbipartite = false;
    bool claim1_vertex_determining = false;

    bool claim2_nonidentity = false;
    bool claim2_involution = false;
    bool claim2_fixes_s = false;
    bool claim2_diagonal_avoids_s = false;
    bool claim2_symmetric = false;

    bool claim3_connected = false;
    bool claim3_arc_transitive = false;

    CompatibilityResult compat;  // sigma: x -> t*x as certificate witness
    bool stable = false;

    bool all_ok() const {
        return claim1_nonbipartite && claim1_vertex_determining && claim2_nonidentity &&
               claim2_involution && claim2_fixes_s && claim2_diagonal_avoids_s &&
               claim2_symmetric && claim3_connected && claim3_arc_transitive &&
               compat.compatible && stable;
    }
};

Thm3Certificate thm3_certificate(int l, int m, int cap = 128);

}  // namespace circstab
