#include <catch2/catch_amalgamated.hpp>

#include "edl/group.hpp"

using namespace edl;

TEST_CASE("builtin groups validate") {
    for (auto name : {"Z2", "Z3", "Z4", "S3", "D4", "Q8", "1"}) {
        Group g = group_by_name(name);
        REQUIRE(g.e >= 0);
        for (int x = 0; x < g.n; ++x) REQUIRE(g.mul[x][g.inv[x]] == g.e);
    }
    REQUIRE(group_by_name("S3").n == 6);
    REQUIRE(group_by_name("Q8").n == 8);
}

TEST_CASE("broken tables rejected") {
    // swap two entries of Z3 to break the group axioms
    Group z3 = cyclic_group(3);
    auto t = z3.mul;
    std::swap(t[1][1], t[1][2]);
    REQUIRE_THROWS_AS(Group(t, {}, "broken"), NotAGroup);
}

TEST_CASE("conjugacy classes of S3") {
    Group s3 = symmetric3();
    auto classes = s3.conjugacy_classes();
    REQUIRE(classes.size() == 3);
    std::vector<size_t> sizes;
    for (auto& c : classes) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    REQUIRE(sizes == std::vector<size_t>{1, 2, 3});
    // centralizer orders: 6, 2, 3
    REQUIRE(s3.centralizer(s3.e).size() == 6);
    REQUIRE(s3.centralizer(1).size() == 2);  // a transposition
    REQUIRE(s3.centralizer(4).size() == 3);  // a 3-cycle
}

TEST_CASE("diagonal conjugation orbits") {
    SECTION("abelian: all singletons") {
        Group z4 = cyclic_group(4);
        auto orbits = z4.diag_conj_orbits();
        REQUIRE(orbits.size() == 16);
        REQUIRE(z4.burnside_pair_orbit_count() == 16);
    }
    SECTION("S3: Burnside count matches direct enumeration") {
        Group s3 = symmetric3();
        auto orbits = s3.diag_conj_orbits();
        REQUIRE(static_cast<long>(orbits.size()) == s3.burnside_pair_orbit_count());
        // direct oracle: (36 + 3*4 + 2*9)/6 = 11
        REQUIRE(orbits.size() == 11);
        size_t total = 0;
        for (auto& o : orbits) total += o.size();
        REQUIRE(total == 36);
    }
}

TEST_CASE("Q8 structure") {
    Group q8 = quaternion8();
    // -1 is central of order 2, i,j,k have order 4
    REQUIRE(q8.order_of(1) == 2);
    REQUIRE(q8.centralizer(1).size() == 8);
    for (int x : {2, 4, 6}) REQUIRE(q8.order_of(x) == 4);
    REQUIRE(q8.conjugacy_classes().size() == 5);
    // i j = k, j i = -k
    REQUIRE(q8.mul[2][4] == 6);
    REQUIRE(q8.mul[4][2] == 7);
}

TEST_CASE("subgroups") {
    Group s3 = symmetric3();
    auto [z3, emb] = s3.subgroup({0, 4, 5});
    REQUIRE(z3.n == 3);
    REQUIRE(z3.order_of(1) == 3);
    REQUIRE_THROWS_AS(s3.subgroup({0, 1, 4}), NotAGroup);
}
