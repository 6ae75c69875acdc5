#include "circstab/skeleton.hpp"

namespace circstab {

Graph boolean_square(const Graph& g) {
    const int n = g.vertex_count();
    Graph bs(n, g.labels());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.neighbors(u).intersects(g.neighbors(v))) bs.add_edge(u, v);
    return bs;
}

namespace {

// One side of the dispensability condition for w against the edge {a,b}:
// N(a) n N(b) is a proper subset of N(a) n N(w), or N(a) < N(w) < N(b).
bool side_holds(const Graph& g, int a, int b, int w) {
    Bitset ab = g.neighbors(a) & g.neighbors(b);
    Bitset aw = g.neighbors(a) & g.neighbors(w);
    if (ab.proper_subset_of(aw)) return true;
    return g.neighbors(a).proper_subset_of(g.neighbors(w)) &&
           g.neighbors(w).proper_subset_of(g.neighbors(b));
}

}  // namespace

std::vector<std::pair<int, int>> dispensable_edges(const Graph& g) {
    Graph bs = boolean_square(g);
    std::vector<std::pair<int, int>> out;
    for (auto [u, v] : bs.edges()) {
        for (int w = 0; w < g.vertex_count(); ++w) {
            if (side_holds(g, u, v, w) && side_holds(g, v, u, w)) {
                out.emplace_back(u, v);
                break;
            }
        }
    }
    return out;
}

Graph cartesian_skeleton(const Graph& g) {
    Graph sk = boolean_square(g);
    for (auto [u, v] : dispensable_edges(g)) sk.remove_edge(u, v);
    return sk;
}

}  // namespace circstab
