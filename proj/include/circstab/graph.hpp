#pragma once

#include <string>
#include <utility>
#include <vector>

#include "circstab/abelian.hpp"
#include "circstab/bitset.hpp"

namespace circstab {

// Simple undirected graph over vertices 0..n-1 with dense neighbor bitsets.
// Immutable once built (constructors below finish all edge insertion).
class Graph {
public:
    explicit Graph(int n, std::vector<std::string> labels = {});

    int vertex_count() const { return n_; }
    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const Bitset& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }
    long long edge_count() const;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    // Edges as (u,v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    std::string label(int v) const;
    const std::vector<std::string>& labels() const { return labels_; }

    // Structural equality on the same vertex set; labels ignored.
    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    int n_;
    std::vector<Bitset> adj_;
    std::vector<std::string> labels_;
};

// Validates and canonicalizes a connection set: nonempty, no identity,
// inverse-closed. Returns sorted unique element ids. Throws InputError
// naming the offending element.
std::vector<int> validate_connection_set(const AbelianGroup& g, std::vector<int> s);

// Cay(G,S): x ~ y iff y - x in S. Vertices in element-id order.
Graph cayley_graph(const AbelianGroup& g, const std::vector<int>& s);

// Circulant Cay(Z_n, S); set entries are residues, negatives reduced.
Graph circulant(int n, const std::vector<int>& s);

// Canonical double cover: vertex (u,x) is u + x*n for layers x in {0,1}.
Graph double_cover(const Graph& g);

// For odd n, D(Cay(Z_n,S)) as a circulant of Z_{2n}: each s lifts to the
// odd t = s (mod n). Returns (2n, T).
std::pair<int, std::vector<int>> double_cover_as_circulant(int n, const std::vector<int>& s);

// Products on pair vertices (u,x) -> u*|gamma|+x.
Graph direct_product(const Graph& sigma, const Graph& gamma);
Graph lexicographic_product(const Graph& sigma, const Graph& gamma);
Graph cartesian_product(const Graph& sigma, const Graph& gamma);

// Checks the identity  sigma x K_d  ==  sigma[~K_d] minus d diagonal copies
// of sigma, by building both sides and testing isomorphism.
bool minus_product_identity_check(const Graph& sigma, int d);

Graph complete(int n);
Graph cycle(int n);
Graph edgeless(int n);
Graph complete_bipartite(int a, int b);
Graph disjoint_union(const std::vector<Graph>& parts);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_vertex_determining(const Graph& g);

// Canonical-form isomorphism test (engine lives in autgroup).
bool are_isomorphic(const Graph& a, const Graph& b, int cap = 64);

std::string to_dot(const Graph& g);
std::string graph_to_json(const Graph& g);

}  // namespace circstab
