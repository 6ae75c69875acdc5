#include "circstab/stability.hpp"

namespace circstab {

std::string to_string(Stability s) {
    switch (s) {
        case Stability::stable: return "stable";
        case Stability::trivially_unstable: return "trivially_unstable";
        case Stability::nontrivially_unstable: return "nontrivially_unstable";
    }
    return "?";
}

std::string to_string(TrivialReason r) {
    switch (r) {
        case TrivialReason::disconnected: return "disconnected";
        case TrivialReason::bipartite: return "bipartite";
        case TrivialReason::not_vertex_determining: return "not_vertex_determining";
    }
    return "?";
}

namespace {

// Layer-preserving automorphisms of the double cover, as a colored group.
// Each such automorphism is exactly a TF pair (its two layer actions).
PermGroup layer_preserving_group(const Graph& g, int cap) {
    Graph d = double_cover(g);
    std::vector<int> colors(d.vertex_count(), 0);
    for (int v = g.vertex_count(); v < d.vertex_count(); ++v) colors[v] = 1;
    return automorphism_group(d, colors, cap);
}

std::optional<TFWitness> witness_from_group(const Graph& g, const PermGroup& layered) {
    const int n = g.vertex_count();
    for (const auto& gen : layered.generators) {
        Permutation alpha, beta;
        alpha.img.resize(n);
        beta.img.resize(n);
        for (int u = 0; u < n; ++u) {
            alpha.img[u] = gen.img[u];
            beta.img[u] = gen.img[u + n] - n;
        }
        if (alpha != beta) return TFWitness{std::move(alpha), std::move(beta)};
    }
    return std::nullopt;
}

}  // namespace

bool is_stable(const Graph& g, int cap) {
    if (2 * g.vertex_count() > cap)
        throw SizeLimitError("double cover exceeds vertex cap " + std::to_string(cap));
    GroupOrder aut = automorphism_group(g, cap).order;
    GroupOrder daut = automorphism_group(double_cover(g), cap).order;
    return daut == aut.times(2);
}

StabilityVerdict classify(const Graph& g, int cap, bool extract_witness) {
    if (2 * g.vertex_count() > cap)
        throw SizeLimitError("double cover exceeds vertex cap " + std::to_string(cap));
    StabilityVerdict v;
    v.connected = is_connected(g);
    v.bipartite = is_bipartite(g);
    v.vertex_determining = is_vertex_determining(g);

    PermGroup aut = automorphism_group(g, cap);
    PermGroup daut = automorphism_group(double_cover(g), cap);
    v.aut_order = aut.order;
    v.dcover_aut_order = daut.order;

    if (!v.connected) v.trivial_reasons.push_back(TrivialReason::disconnected);
    if (v.bipartite && !aut.order.is_one()) v.trivial_reasons.push_back(TrivialReason::bipartite);
    if (!v.vertex_determining) v.trivial_reasons.push_back(TrivialReason::not_vertex_determining);

    bool stable = daut.order == aut.order.times(2);
    if (stable) {
        v.status = Stability::stable;
    } else if (v.connected && !v.bipartite && v.vertex_determining) {
        v.status = Stability::nontrivially_unstable;
    } else {
        v.status = Stability::trivially_unstable;
    }

    if (!stable && extract_witness) v.tf_witness = tf_witness(g, cap);
    return v;
}

std::optional<TFWitness> tf_witness(const Graph& g, int cap) {
    if (2 * g.vertex_count() > cap)
        throw SizeLimitError("double cover exceeds vertex cap " + std::to_string(cap));
    PermGroup layered = layer_preserving_group(g, cap);
    auto w = witness_from_group(g, layered);
    if (w && !verify_tf_pair(g, w->alpha, w->beta))
        throw std::logic_error("extracted TF witness failed verification");
    return w;
}

bool verify_tf_pair(const Graph& g, const Permutation& alpha, const Permutation& beta) {
    const int n = g.vertex_count();
    if (alpha.degree() != n || beta.degree() != n) return false;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (g.adjacent(u, v) != g.adjacent(alpha.img[u], beta.img[v])) return false;
    return true;
}

}  // namespace circstab
