#include <doctest.h>

#include <random>

#include "circstab/stability.hpp"
#include "circstab/survey.hpp"
#include "oracles.hpp"

using namespace circstab;

namespace {

const std::vector<int> kSet24{2, 3, 8, 9, 10, 14, 15, 16, 21, 22};

}  // namespace

TEST_CASE("is_stable on the small landmarks") {
    for (int n = 3; n <= 6; ++n) CHECK(is_stable(complete(n)));
    CHECK_FALSE(is_stable(cycle(4)));
    CHECK(is_stable(circulant(12, {3, 4, 8, 9})));
}

TEST_CASE("classification statuses") {
    auto v24 = classify(circulant(24, kSet24));
    CHECK(v24.status == Stability::nontrivially_unstable);
    CHECK(v24.connected);
    CHECK_FALSE(v24.bipartite);
    CHECK(v24.vertex_determining);
    CHECK(v24.trivial_reasons.empty());
    REQUIRE(v24.tf_witness.has_value());
    CHECK(verify_tf_pair(circulant(24, kSet24), v24.tf_witness->alpha, v24.tf_witness->beta));
    CHECK(v24.tf_witness->alpha != v24.tf_witness->beta);

    // K_{4,4}: bipartite with plenty of automorphisms (and repeated
    // neighborhoods, so both trivial reasons apply)
    auto vb = classify(circulant(8, {1, 3, 5, 7}));
    CHECK(vb.status == Stability::trivially_unstable);
    bool has_bip = false;
    for (auto r : vb.trivial_reasons) has_bip |= r == TrivialReason::bipartite;
    CHECK(has_bip);

    for (int p : {5, 7})
        for (const auto& s : enumerate_connection_sets(p))
            CHECK(classify(circulant(p, s)).status == Stability::stable);
}

TEST_CASE("stable graphs carry empty reason lists and no witness") {
    auto v = classify(complete(3));
    CHECK(v.status == Stability::stable);
    CHECK(v.trivial_reasons.empty());
    CHECK_FALSE(v.tf_witness.has_value());
    CHECK(v.aut_order.equals_u64(6));
    CHECK(v.dcover_aut_order.equals_u64(12));
}

TEST_CASE("disconnected and non-vertex-determining reasons") {
    auto vd = classify(circulant(8, {2, 6}));
    CHECK(vd.status == Stability::trivially_unstable);
    bool has_disc = false;
    for (auto r : vd.trivial_reasons) has_disc |= r == TrivialReason::disconnected;
    CHECK(has_disc);

    auto vc4 = classify(cycle(4));
    bool has_nvd = false;
    for (auto r : vc4.trivial_reasons) has_nvd |= r == TrivialReason::not_vertex_determining;
    CHECK(has_nvd);
}

TEST_CASE("tf witness present iff unstable") {
    CHECK_FALSE(tf_witness(complete(3)).has_value());

    auto w = tf_witness(cycle(4));
    REQUIRE(w.has_value());
    CHECK(w->alpha != w->beta);
    CHECK(verify_tf_pair(cycle(4), w->alpha, w->beta));
}

TEST_CASE("verify_tf_pair semantics") {
    // identity with the +2 rotation on C4: N(v+2) = N(v)
    Permutation id = Permutation::identity(4);
    Permutation rot2(std::vector<int>{2, 3, 0, 1});
    CHECK(verify_tf_pair(cycle(4), id, rot2));

    // alpha = beta = an automorphism always verifies
    auto aut = automorphism_group(circulant(12, {3, 4, 8, 9}));
    for (const auto& g : aut.generators) CHECK(verify_tf_pair(circulant(12, {3, 4, 8, 9}), g, g));

    Permutation swap01(std::vector<int>{1, 0, 2});
    CHECK_FALSE(verify_tf_pair(complete(3), Permutation::identity(3), swap01));
}

TEST_CASE("order-test instability and witness existence agree on connected circulants") {
    // The two-fold characterization breaks on some disconnected graphs
    // (2K_3 is unstable by the order test yet admits no TF pair; verified
    // against an exhaustive pair search), so the equivalence is asserted on
    // the connected corpus, where the characterization is valid.
    for (int n = 3; n <= 10; ++n)
        for (const auto& s : enumerate_connection_sets(n)) {
            Graph g = circulant(n, s);
            auto v = classify(g, 128, false);
            auto w = tf_witness(g);
            CAPTURE(n);
            if (is_connected(g)) CHECK(v.unstable() == w.has_value());
            if (w) {
                CHECK(v.unstable());  // a witness always certifies instability
                CHECK(w->alpha != w->beta);
                CHECK(verify_tf_pair(g, w->alpha, w->beta));
            }
        }
}

TEST_CASE("the disconnected boundary case: unstable with no TF pair") {
    Graph g = circulant(6, {2, 4});  // two triangles
    CHECK_FALSE(is_stable(g));
    CHECK_FALSE(tf_witness(g).has_value());
}

TEST_CASE("2|Aut(G)| divides |Aut(D(G))|") {
    std::mt19937 rng(123);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = testoracle::random_graph(3 + int(rng() % 8), 0.4, rng);
        auto v = classify(g, 128, false);
        CHECK(v.aut_order.times(2).divides(v.dcover_aut_order));
    }
}

TEST_CASE("neighborhood exchange law for TF pairs") {
    for (auto g : {cycle(4), circulant(24, kSet24), circulant(8, {2, 3, 5, 6})}) {
        auto w = tf_witness(g);
        if (!w) continue;
        const int n = g.vertex_count();
        for (int x = 0; x < n; ++x) {
            Bitset na(n), nb(n);
            for (int y = g.neighbors(x).next(0); y != -1; y = g.neighbors(x).next(y + 1)) {
                na.set(w->beta.img[y]);
                nb.set(w->alpha.img[y]);
            }
            CHECK(g.neighbors(w->alpha.img[x]) == na);
            CHECK(g.neighbors(w->beta.img[x]) == nb);
        }
    }
}

TEST_CASE("vertex cap honored") {
    CHECK_THROWS_AS(classify(cycle(70)), SizeLimitError);
    CHECK_THROWS_AS(is_stable(cycle(70)), SizeLimitError);
}
