#include <doctest.h>

#include <random>

#include "circstab/graph.hpp"
#include "circstab/survey.hpp"
#include "oracles.hpp"

using namespace circstab;

TEST_CASE("cayley graph construction and validation") {
    CHECK(cayley_graph(AbelianGroup::cyclic(3), {1, 2}) == complete(3));

    Graph g847 = circulant(8, {1, 4, 7});
    CHECK(g847.vertex_count() == 8);
    for (int v = 0; v < 8; ++v) CHECK(g847.degree(v) == 3);

    auto g44 = AbelianGroup::product({4, 4});
    std::vector<int> s44;
    for (auto c : {std::vector<int>{2, 2}, {0, 2}, {1, 3}, {3, 1}, {0, 1}, {0, 3}})
        s44.push_back(g44.element(c));
    Graph remark = cayley_graph(g44, s44);
    CHECK(remark.vertex_count() == 16);
    for (int v = 0; v < 16; ++v) CHECK(remark.degree(v) == 6);

    CHECK_THROWS_AS(circulant(5, std::vector<int>{}), InputError);
    CHECK_THROWS_AS(circulant(5, {0, 1, 4}), InputError);
    CHECK_THROWS_AS(circulant(5, {1, 2, 3}), InputError);  // not inverse-closed
    CHECK_THROWS_WITH_AS(circulant(7, {1, 6, 2}), doctest::Contains("inverse-closed"),
                         InputError);
}

TEST_CASE("negative residues reduce on ingestion") {
    CHECK(circulant(12, {1, -1}) == circulant(12, {1, 11}));
}

TEST_CASE("double cover structure") {
    Graph d = double_cover(complete(3));
    CHECK(d.vertex_count() == 6);
    CHECK(is_bipartite(d));
    CHECK(are_isomorphic(d, cycle(6)));

    Graph dc4 = double_cover(cycle(4));
    CHECK(are_isomorphic(dc4, disjoint_union({cycle(4), cycle(4)})));

    Graph de = double_cover(edgeless(3));
    CHECK(de.vertex_count() == 6);
    CHECK(de.edge_count() == 0);

    // (u,x) ~ (v,y) iff u~v and x != y, with layer-major indexing
    Graph g = circulant(5, {1, 4});
    Graph dg = double_cover(g);
    for (int u = 0; u < 5; ++u)
        for (int v = 0; v < 5; ++v) {
            CHECK(dg.adjacent(u, v + 5) == g.adjacent(u, v));
            CHECK_FALSE((dg.adjacent(u, v) && u != v));
        }
}

TEST_CASE("double cover is bipartite; connected iff connected non-bipartite") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = testoracle::random_graph(3 + int(rng() % 8), 0.35, rng);
        Graph d = double_cover(g);
        CHECK(is_bipartite(d));
        CHECK(is_connected(d) == (is_connected(g) && !is_bipartite(g)));
    }
}

TEST_CASE("double cover as circulant, odd order") {
    auto [n6, t6] = double_cover_as_circulant(3, {1, 2});
    CHECK(n6 == 6);
    CHECK(t6 == std::vector<int>{1, 5});

    auto [n10, t10] = double_cover_as_circulant(5, {1, 4});
    CHECK(n10 == 10);
    CHECK(t10 == std::vector<int>{1, 9});

    auto [n30, t30] = double_cover_as_circulant(15, {1, 4, 11, 14});
    CHECK(n30 == 30);
    CHECK(t30 == std::vector<int>{1, 11, 19, 29});
    CHECK(are_isomorphic(circulant(n30, t30), double_cover(circulant(15, {1, 4, 11, 14}))));

    CHECK_THROWS_AS(double_cover_as_circulant(6, {1, 5}), InputError);
}

TEST_CASE("double cover as circulant isomorphism, exhaustive odd n <= 15") {
    for (int n = 3; n <= 15; n += 2)
        for (const auto& s : enumerate_connection_sets(n)) {
            auto [nn, t] = double_cover_as_circulant(n, s);
            CHECK(are_isomorphic(circulant(nn, t), double_cover(circulant(n, s))));
        }
}

TEST_CASE("graph products") {
    CHECK(are_isomorphic(direct_product(complete(3), complete(2)), cycle(6)));
    CHECK(are_isomorphic(direct_product(cycle(5), complete(2)), cycle(10)));
    CHECK(direct_product(cycle(5), edgeless(1)).edge_count() == 0);

    CHECK(are_isomorphic(lexicographic_product(complete(2), edgeless(3)),
                         complete_bipartite(3, 3)));
    CHECK(lexicographic_product(cycle(5), edgeless(1)) == cycle(5));

    CHECK(are_isomorphic(cartesian_product(complete(2), complete(2)), cycle(4)));
    Graph prism = cartesian_product(cycle(3), complete(2));
    CHECK(prism.vertex_count() == 6);
    CHECK(prism.edge_count() == 9);
}

TEST_CASE("K_{n,n} minus a perfect matching is K_n x K_2") {
    for (int n : {3, 4, 5}) {
        Graph knn = complete_bipartite(n, n);
        for (int i = 0; i < n; ++i) knn.remove_edge(i, n + i);
        CHECK(are_isomorphic(knn, direct_product(complete(n), complete(2))));
    }
}

TEST_CASE("minus-product identity") {
    CHECK(minus_product_identity_check(cycle(5), 2));
    CHECK(minus_product_identity_check(complete(3), 3));
    CHECK(minus_product_identity_check(edgeless(2), 2));
}

TEST_CASE("minus-product identity over random graphs") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = testoracle::random_graph(2 + int(rng() % 7), 0.4, rng);
        for (int d : {2, 3}) CHECK(minus_product_identity_check(g, d));
    }
}

TEST_CASE("vertex-determining predicates") {
    CHECK_FALSE(is_vertex_determining(cycle(4)));
    CHECK(is_vertex_determining(complete(3)));
    CHECK_FALSE(is_vertex_determining(lexicographic_product(complete(2), edgeless(2))));
}

TEST_CASE("direct product vertex-determining iff both factors are") {
    std::mt19937 rng(23);
    int checked = 0;
    while (checked < 25) {
        Graph a = testoracle::random_graph(2 + int(rng() % 7), 0.45, rng);
        Graph b = testoracle::random_graph(2 + int(rng() % 7), 0.45, rng);
        // the product law needs factors without isolated vertices
        bool iso_free = true;
        for (int v = 0; v < a.vertex_count(); ++v)
            if (a.degree(v) == 0) iso_free = false;
        for (int v = 0; v < b.vertex_count(); ++v)
            if (b.degree(v) == 0) iso_free = false;
        if (!iso_free) continue;
        ++checked;
        CHECK(is_vertex_determining(direct_product(a, b)) ==
              (is_vertex_determining(a) && is_vertex_determining(b)));
    }
}

TEST_CASE("lexicographic blowup by an edgeless graph is never vertex-determining") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        Graph sigma = testoracle::random_graph(2 + int(rng() % 6), 0.5, rng);
        if (sigma.edge_count() == 0) continue;
        for (int d : {2, 3})
            CHECK_FALSE(is_vertex_determining(lexicographic_product(sigma, edgeless(d))));
    }
}

TEST_CASE("connectivity and bipartiteness") {
    CHECK_FALSE(is_connected(circulant(8, {2, 6})));
    CHECK(is_connected(cycle(7)));
    CHECK(is_connected(Graph(1)));
    CHECK(is_bipartite(circulant(8, {1, 3, 5, 7})));
    CHECK_FALSE(is_bipartite(complete(3)));
}

TEST_CASE("standard graphs") {
    CHECK(complete(4).edge_count() == 6);
    CHECK(disjoint_union({cycle(4), cycle(4)}).vertex_count() == 8);
    CHECK_THROWS_AS(cycle(2), InputError);
}

TEST_CASE("cayley graphs are vertex-transitive under translations") {
    auto g = AbelianGroup::product({3, 3});
    std::vector<int> s{g.element({1, 0}), g.element({2, 0}), g.element({1, 1}), g.element({2, 2})};
    Graph gamma = cayley_graph(g, s);
    for (int t = 0; t < g.order(); ++t) {
        for (auto [u, v] : gamma.edges()) CHECK(gamma.adjacent(g.add(u, t), g.add(v, t)));
    }
}

TEST_CASE("dot export format") {
    Graph p3 = cycle(3);
    CHECK(to_dot(p3) ==
          "graph G {\n"
          "  0 [label=\"0\"];\n"
          "  1 [label=\"1\"];\n"
          "  2 [label=\"2\"];\n"
          "  0 -- 1;\n"
          "  0 -- 2;\n"
          "  1 -- 2;\n"
          "}\n");
}

TEST_CASE("json export schema") {
    CHECK(graph_to_json(cycle(3)) == "{\"n\":3,\"edges\":[[0,1],[0,2],[1,2]]}");
}
