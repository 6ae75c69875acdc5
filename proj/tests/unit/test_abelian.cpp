#include <doctest.h>

#include <array>
#include <numeric>
#include <vector>

#include "circstab/abelian.hpp"

using namespace circstab;

TEST_CASE("cyclic construction") {
    CHECK(AbelianGroup::cyclic(1).order() == 1);
    CHECK(AbelianGroup::cyclic(12).order() == 12);
    auto z15 = AbelianGroup::cyclic(15);
    CHECK(z15.order() == 15);
    CHECK(z15.add(7, 11) == 3);
    CHECK(z15.neg(4) == 11);
    CHECK_THROWS_AS(AbelianGroup::cyclic(0), InputError);
    CHECK_THROWS_AS(AbelianGroup::cyclic(-3), InputError);
}

TEST_CASE("product construction") {
    auto g44 = AbelianGroup::product({4, 4});
    CHECK(g44.order() == 16);
    CHECK(g44.descriptor() == "4x4");
    CHECK(g44.name(g44.element({1, 3})) == "(1,3)");
    CHECK(AbelianGroup::product({2}).order() == 2);
    CHECK_THROWS_AS(AbelianGroup::product({4, 1}), InputError);
}

TEST_CASE("Z3 x Z5 is Z15 after crt relabeling") {
    auto g = AbelianGroup::product({3, 5});
    CHECK(g.order() == 15);
    auto z15 = AbelianGroup::cyclic(15);
    // phi(x mod 15) = (x mod 3, x mod 5) must transport addition.
    auto phi = [&](int x) { return g.element({x % 3, x % 5}); };
    for (int a = 0; a < 15; ++a)
        for (int b = 0; b < 15; ++b) CHECK(phi(z15.add(a, b)) == g.add(phi(a), phi(b)));
    // and be a bijection
    std::vector<char> hit(15, 0);
    for (int a = 0; a < 15; ++a) hit[phi(a)] = 1;
    for (char h : hit) CHECK(h == 1);
}

TEST_CASE("units_mod") {
    CHECK(units_mod(12) == std::vector<int>{1, 5, 7, 11});
    CHECK(units_mod(2) == std::vector<int>{1});
    CHECK(units_mod(15) == std::vector<int>{1, 2, 4, 7, 8, 11, 13, 14});
}

TEST_CASE("crt_solve") {
    CHECK(crt_solve(-1, 3, 1, 5) == 11);
    CHECK(crt_solve(0, 4, 0, 9) == 0);
    CHECK(crt_solve(-1, 3, 1, 7) == 8);
    CHECK_THROWS_AS(crt_solve(1, 4, 3, 6), InputError);
    // the output satisfies both congruences by direct reduction
    for (auto [r1, m1, r2, m2] : {std::array<long long, 4>{2, 7, 4, 9},
                                  std::array<long long, 4>{-3, 11, 5, 8}}) {
        long long t = crt_solve(r1, m1, r2, m2);
        CHECK(t % m1 == ((r1 % m1) + m1) % m1);
        CHECK(t % m2 == ((r2 % m2) + m2) % m2);
        CHECK(t >= 0);
        CHECK(t < m1 * m2);
    }
}

TEST_CASE("automorphism enumeration") {
    CHECK(automorphisms(AbelianGroup::cyclic(12)).size() == 4);
    CHECK(automorphisms(AbelianGroup::cyclic(2)).size() == 1);
    CHECK(automorphisms(AbelianGroup::product({4, 4})).size() == 96);
    CHECK_THROWS_AS(automorphisms(AbelianGroup::cyclic(100)), SizeLimitError);
}

TEST_CASE("automorphisms preserve addition, exhaustively") {
    for (auto g : {AbelianGroup::cyclic(12), AbelianGroup::product({2, 4}),
                   AbelianGroup::product({3, 3})}) {
        for (const auto& a : automorphisms(g))
            for (int x = 0; x < g.order(); ++x)
                for (int y = 0; y < g.order(); ++y)
                    CHECK(a.images[g.add(x, y)] == g.add(a.images[x], a.images[y]));
    }
}

TEST_CASE("cyclic automorphism count equals unit count") {
    for (int n : {2, 5, 8, 12, 15, 24})
        CHECK(automorphisms(AbelianGroup::cyclic(n)).size() == units_mod(n).size());
}

TEST_CASE("set stabilizer") {
    auto z12 = AbelianGroup::cyclic(12);
    auto stab = set_stabilizer(z12, {3, 4, 8, 9});
    CHECK(stab.size() == 4);  // multipliers 1,5,7,11 all fix the set

    auto z5 = AbelianGroup::cyclic(5);
    CHECK(set_stabilizer(z5, {1, 4}).size() == 2);

    auto z15 = AbelianGroup::cyclic(15);
    auto st15 = set_stabilizer(z15, {1, 4, 11, 14});
    bool has11 = false, has14 = false;
    for (const auto& a : st15) {
        if (a.images[1] == 11) has11 = true;
        if (a.images[1] == 14) has14 = true;
    }
    CHECK(has11);
    CHECK(has14);
}

TEST_CASE("stabilizer order divides automorphism-group order") {
    auto g = AbelianGroup::cyclic(12);
    auto total = automorphisms(g).size();
    for (auto s : {std::vector<int>{3, 4, 8, 9}, std::vector<int>{1, 11}, std::vector<int>{6}})
        CHECK(total % set_stabilizer(g, s).size() == 0);
}

TEST_CASE("negation is a nonidentity automorphism exactly when n > 2") {
    for (int n : {3, 5, 7, 9, 15}) {
        auto g = AbelianGroup::cyclic(n);
        bool found_nonidentity_negation = false;
        for (const auto& a : automorphisms(g)) {
            bool is_neg = true, is_id = true;
            for (int x = 0; x < n; ++x) {
                if (a.images[x] != g.neg(x)) is_neg = false;
                if (a.images[x] != x) is_id = false;
            }
            if (is_neg && !is_id) found_nonidentity_negation = true;
        }
        CHECK(found_nonidentity_negation == (n > 2));
    }
    CHECK(automorphisms(AbelianGroup::cyclic(2)).size() == 1);
}

TEST_CASE("negation is in the stabilizer of an inverse-closed set") {
    auto g = AbelianGroup::cyclic(15);
    auto stab = set_stabilizer(g, {1, 4, 11, 14});
    bool found = false;
    for (const auto& a : stab) {
        bool is_neg = true;
        for (int x = 0; x < 15; ++x)
            if (a.images[x] != g.neg(x)) is_neg = false;
        found = found || is_neg;
    }
    CHECK(found);
}

TEST_CASE("subgroups of cyclic groups") {
    auto s12 = subgroups_cyclic(12);
    CHECK(s12.size() == 6);
    CHECK(s12.front() == std::vector<int>{0});
    CHECK(s12.back().size() == 12);

    CHECK(subgroups_cyclic(7).size() == 2);

    auto s8 = subgroups_cyclic(8);
    REQUIRE(s8.size() == 4);
    CHECK(s8[1] == std::vector<int>{0, 4});
    CHECK(s8[2] == std::vector<int>{0, 2, 4, 6});
}
