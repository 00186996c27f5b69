#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "pds/automorphisms.hpp"
#include "support/oracles.hpp"

using namespace pds;

namespace {

bool is_homomorphism(const GroupTable& G, const Automorphism& a) {
    if (a.perm[0] != 0) return false;
    for (int g = 0; g < G.order; ++g)
        for (int h = 0; h < G.order; ++h)
            if (a.perm[G.mul(g, h)] != G.mul(a.perm[g], a.perm[h])) return false;
    return true;
}

Automorphism compose(const Automorphism& a, const Automorphism& b) {
    Automorphism c;
    c.perm.resize(a.perm.size());
    for (std::size_t i = 0; i < a.perm.size(); ++i) c.perm[i] = a.perm[b.perm[i]];
    return c;
}

} // namespace

TEST_CASE("small automorphism group sizes") {
    CHECK(automorphism_group(cyclic(1)).size() == 1);
    CHECK(automorphism_group(cyclic(4)).size() == 2);   // identity and inversion
    CHECK(automorphism_group(construct_from_spec("C2xC2", "v4")).size() == 6);  // GL(2,2)
    CHECK(automorphism_group(cyclic(8)).size() == 4);
    CHECK(automorphism_group(test::make_dihedral(4)).size() == 8);  // Aut(D4) = D4
}

TEST_CASE("Aut(C8xC8) has order 1536 and every member is a homomorphism") {
    GroupTable G = test::make_c8xc8();
    auto aut = automorphism_group(G);
    CHECK(aut.size() == 1536);  // |GL(2, Z/8)| = 2^8 * 6
    for (const auto& a : aut) REQUIRE(is_homomorphism(G, a));
}

TEST_CASE("every output is an automorphism, exhaustively") {
    for (const GroupTable& G : {test::make_m4_2(), test::make_dihedral(8)}) {
        auto aut = automorphism_group(G);
        std::set<std::vector<elem_t>> distinct;
        for (const auto& a : aut) {
            REQUIRE(is_homomorphism(G, a));
            distinct.insert(a.perm);
        }
        CHECK(distinct.size() == aut.size());
    }
}

TEST_CASE("closure under composition and inverse") {
    GroupTable G = test::make_m4_2();
    auto aut = automorphism_group(G);
    std::set<std::vector<elem_t>> have;
    for (const auto& a : aut) have.insert(a.perm);

    // identity present
    std::vector<elem_t> id;
    for (int i = 0; i < G.order; ++i) id.push_back(static_cast<elem_t>(i));
    CHECK(have.count(id) == 1);

    // full composition table stays inside (small group, exhaustive)
    for (const auto& a : aut)
        for (const auto& b : aut) REQUIRE(have.count(compose(a, b).perm) == 1);

    // inverses present
    for (const auto& a : aut) {
        Automorphism inv;
        inv.perm.resize(G.order);
        for (int i = 0; i < G.order; ++i) inv.perm[a.perm[i]] = static_cast<elem_t>(i);
        REQUIRE(have.count(inv.perm) == 1);
    }
}

TEST_CASE("composition closure, sampled, for a large automorphism group") {
    GroupTable G = test::make_g192();
    auto aut = automorphism_group(G);
    CHECK(aut.size() == 147456);
    std::set<std::vector<elem_t>> have;
    for (const auto& a : aut) have.insert(a.perm);
    CHECK(have.size() == aut.size());

    std::mt19937 rng(23);
    std::uniform_int_distribution<std::size_t> pick(0, aut.size() - 1);
    for (int t = 0; t < 200; ++t)
        REQUIRE(have.count(compose(aut[pick(rng)], aut[pick(rng)]).perm) == 1);
    for (int t = 0; t < 20; ++t) REQUIRE(is_homomorphism(G, aut[pick(rng)]));
}

TEST_CASE("enumeration is deterministic") {
    auto a1 = automorphism_group(test::make_m4_2());
    auto a2 = automorphism_group(test::make_m4_2());
    REQUIRE(a1.size() == a2.size());
    for (std::size_t i = 0; i < a1.size(); ++i) CHECK(a1[i] == a2[i]);
}

TEST_CASE("groups beyond the 2^20 limit fail loudly") {
    // |Aut(C2^5)| = |GL(5,2)| ~ 10^7
    CHECK_THROWS_AS(automorphism_group(construct_from_spec("C2xC2xC2xC2xC2", "c2_5")),
                    AutGroupTooLargeError);
}
