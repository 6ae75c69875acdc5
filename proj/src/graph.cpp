#include "circstab/graph.hpp"

#include <algorithm>
#include <queue>

namespace circstab {

Graph::Graph(int n, std::vector<std::string> labels) : n_(n), labels_(std::move(labels)) {
    if (n < 1) throw InputError("graph needs at least one vertex");
    adj_.assign(n, Bitset(n));
}

long long Graph::edge_count() const {
    long long deg = 0;
    for (int v = 0; v < n_; ++v) deg += degree(v);
    return deg / 2;
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw InputError("loops are not allowed");
    adj_[u].set(v);
    adj_[v].set(u);
}

void Graph::remove_edge(int u, int v) {
    adj_[u].reset(v);
    adj_[v].reset(u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].next(u + 1); v != -1; v = adj_[u].next(v + 1)) e.emplace_back(u, v);
    return e;
}

std::string Graph::label(int v) const {
    if (v < static_cast<int>(labels_.size()) && !labels_[v].empty()) return labels_[v];
    return std::to_string(v);
}

std::vector<int> validate_connection_set(const AbelianGroup& g, std::vector<int> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) throw InputError("connection set is empty");
    std::vector<char> in_s(g.order(), 0);
    for (int e : s) {
        if (e < 0 || e >= g.order())
            throw InputError("connection set element " + std::to_string(e) + " out of range");
        if (e == 0) throw InputError("connection set contains the identity element " + g.name(0));
        in_s[e] = 1;
    }
    for (int e : s)
        if (!in_s[g.neg(e)])
            throw InputError("connection set is not inverse-closed: missing -" + g.name(e) + " = " +
                             g.name(g.neg(e)));
    return s;
}

Graph cayley_graph(const AbelianGroup& g, const std::vector<int>& s) {
    auto set = validate_connection_set(g, s);
    const int n = g.order();
    std::vector<std::string> labels(n);
    for (int e = 0; e < n; ++e) labels[e] = g.name(e);
    Graph gr(n, std::move(labels));
    for (int x = 0; x < n; ++x)
        for (int d : set) gr.add_edge(x, g.add(x, d));
    return gr;
}

Graph circulant(int n, const std::vector<int>& s) {
    auto g = AbelianGroup::cyclic(n);
    std::vector<int> reduced;
    reduced.reserve(s.size());
    for (int e : s) {
        int r = e % n;
        if (r < 0) r += n;
        reduced.push_back(r);
    }
    return cayley_graph(g, reduced);
}

Graph double_cover(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::string> labels(2 * n);
    for (int v = 0; v < n; ++v) {
        labels[v] = g.label(v) + "+";
        labels[v + n] = g.label(v) + "-";
    }
    Graph d(2 * n, std::move(labels));
    for (auto [u, v] : g.edges()) {
        d.add_edge(u, v + n);
        d.add_edge(v, u + n);
    }
    return d;
}

std::pair<int, std::vector<int>> double_cover_as_circulant(int n, const std::vector<int>& s) {
    if (n % 2 == 0) throw InputError("double_cover_as_circulant needs odd n");
    auto set = validate_connection_set(AbelianGroup::cyclic(n), [&] {
        std::vector<int> r;
        for (int e : s) {
            int x = e % n;
            if (x < 0) x += n;
            r.push_back(x);
        }
        return r;
    }());
    std::vector<int> t;
    for (int e : set) t.push_back(e % 2 == 1 ? e : e + n);
    std::sort(t.begin(), t.end());
    return {2 * n, t};
}

namespace {

std::vector<std::string> pair_labels(const Graph& a, const Graph& b) {
    std::vector<std::string> labels(size_t(a.vertex_count()) * b.vertex_count());
    for (int u = 0; u < a.vertex_count(); ++u)
        for (int x = 0; x < b.vertex_count(); ++x)
            labels[size_t(u) * b.vertex_count() + x] = "(" + a.label(u) + "," + b.label(x) + ")";
    return labels;
}

}  // namespace

Graph direct_product(const Graph& a, const Graph& b) {
    const int nb = b.vertex_count();
    Graph g(a.vertex_count() * nb, pair_labels(a, b));
    for (auto [u, v] : a.edges())
        for (auto [x, y] : b.edges()) {
            g.add_edge(u * nb + x, v * nb + y);
            g.add_edge(u * nb + y, v * nb + x);
        }
    return g;
}

Graph lexicographic_product(const Graph& a, const Graph& b) {
    const int na = a.vertex_count(), nb = b.vertex_count();
    Graph g(na * nb, pair_labels(a, b));
    for (auto [u, v] : a.edges())
        for (int x = 0; x < nb; ++x)
            for (int y = 0; y < nb; ++y) g.add_edge(u * nb + x, v * nb + y);
    for (int u = 0; u < na; ++u)
        for (auto [x, y] : b.edges()) g.add_edge(u * nb + x, u * nb + y);
    return g;
}

Graph cartesian_product(const Graph& a, const Graph& b) {
    const int na = a.vertex_count(), nb = b.vertex_count();
    Graph g(na * nb, pair_labels(a, b));
    for (auto [u, v] : a.edges())
        for (int x = 0; x < nb; ++x) g.add_edge(u * nb + x, v * nb + x);
    for (int u = 0; u < na; ++u)
        for (auto [x, y] : b.edges()) g.add_edge(u * nb + x, u * nb + y);
    return g;
}

bool minus_product_identity_check(const Graph& sigma, int d) {
    if (d <= 1) throw InputError("minus_product_identity_check needs d > 1");
    Graph lhs = direct_product(sigma, complete(d));
    Graph rhs = lexicographic_product(sigma, edgeless(d));
    // The d diagonal copies are the fibers with equal second coordinate.
    for (auto [u, v] : sigma.edges())
        for (int i = 0; i < d; ++i) rhs.remove_edge(u * d + i, v * d + i);
    return are_isomorphic(lhs, rhs, std::max(lhs.vertex_count(), 64));
}

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw InputError("cycle needs n >= 3");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph edgeless(int n) { return Graph(n); }

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph disjoint_union(const std::vector<Graph>& parts) {
    int n = 0;
    for (const auto& p : parts) n += p.vertex_count();
    if (n == 0) throw InputError("disjoint_union of nothing");
    Graph g(n);
    int off = 0;
    for (const auto& p : parts) {
        for (auto [u, v] : p.edges()) g.add_edge(off + u, off + v);
        off += p.vertex_count();
    }
    return g;
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v = g.neighbors(u).next(0); v != -1; v = g.neighbors(u).next(v + 1))
            if (!seen[v]) {
                seen[v] = 1;
                ++cnt;
                q.push(v);
            }
    }
    return cnt == n;
}

bool is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v = g.neighbors(u).next(0); v != -1; v = g.neighbors(u).next(v + 1)) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    q.push(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_vertex_determining(const Graph& g) {
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.neighbors(u) == g.neighbors(v)) return false;
    return true;
}

std::string to_dot(const Graph& g) {
    std::string out = "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        out += "  " + std::to_string(v) + " [label=\"" + g.label(v) + "\"];\n";
    for (auto [u, v] : g.edges())
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

std::string graph_to_json(const Graph& g) {
    std::string out = "{\"n\":" + std::to_string(g.vertex_count()) + ",\"edges\":[";
    bool first = true;
    for (auto [u, v] : g.edges()) {
        if (!first) out += ",";
        first = false;
        out += "[" + std::to_string(u) + "," + std::to_string(v) + "]";
    }
    return out + "]}";
}

}  // namespace circstab
