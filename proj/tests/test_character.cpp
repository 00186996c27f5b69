#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "pds/character.hpp"
#include "support/oracles.hpp"

using namespace pds;

namespace {

const int kEq2[8][8] = {
    {1, 1, 1, 1, 1, 1, 1, 1},
    {1, -1, 1, 1, -1, 1, -1, -1},
    {1, 1, -1, 1, -1, -1, 1, -1},
    {1, 1, 1, -1, 1, -1, -1, -1},
    {1, 1, -1, -1, -1, 1, -1, 1},
    {1, -1, 1, -1, -1, -1, 1, 1},
    {1, -1, -1, 1, 1, -1, -1, 1},
    {1, -1, -1, -1, 1, 1, 1, -1},
};

} // namespace

TEST_CASE("character matrix for m = 1") {
    CharacterMatrix H = character_matrix(1);
    CHECK(H.at(0, 0) == 1);
    CHECK(H.at(0, 1) == 1);
    CHECK(H.at(1, 0) == 1);
    CHECK(H.at(1, 1) == -1);
}

TEST_CASE("character matrix for m = 3 is the classical 8x8 table") {
    CharacterMatrix H = character_matrix(3);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) REQUIRE(H.at(i, j) == kEq2[i][j]);
}

TEST_CASE("orthogonality and row sums for m = 1..4") {
    for (int m = 1; m <= 4; ++m) {
        CharacterMatrix H = character_matrix(m);
        const int q = H.dim();
        for (int i = 0; i < q; ++i)
            for (int i2 = 0; i2 < q; ++i2) {
                int dot = 0;
                for (int j = 0; j < q; ++j) dot += H.at(i, j) * H.at(i2, j);
                REQUIRE(dot == (i == i2 ? q : 0));  // H H^T = 2^m I
            }
        for (int i = 1; i < q; ++i) {
            int sum = 0;
            for (int j = 0; j < q; ++j) sum += H.at(i, j);
            CHECK(sum == 0);
        }
        for (int j = 0; j < q; ++j) CHECK(H.at(0, j) == 1);
        for (int i = 0; i < q; ++i) CHECK(H.at(i, 0) == 1);
    }
}

TEST_CASE("distribution enumeration for (64,18,2,6)") {
    CharacterMatrix H = character_matrix(3);
    PdsParams p = PdsParams::nlst(64, 18, 2, 6);
    auto dists = enumerate_distributions(H, p);

    // every emitted v multiplies back to a legal sign vector (round trip)
    for (const auto& d : dists) {
        REQUIRE(d.eps.size() == 7);
        int sum = 0;
        for (int c : d.counts) {
            CHECK(c >= 0);
            sum += c;
        }
        CHECK(sum == p.k);
        for (int i = 0; i < 8; ++i) {
            long u = 0;
            for (int j = 0; j < 8; ++j) u += H.at(i, j) * d.counts[j];
            if (i == 0) CHECK(u == p.k);
            else {
                CHECK(u == d.eps[i - 1]);
                CHECK((u == p.theta_plus || u == p.theta_minus));
            }
        }
    }

    // all 92 nonnegative integer vectors, distinct, split all-even/all-odd
    CHECK(dists.size() == 92);
    int even = 0, odd = 0;
    for (const auto& d : dists) {
        bool all_even = std::all_of(d.counts.begin(), d.counts.end(),
                                    [](int c) { return c % 2 == 0; });
        bool all_odd = std::all_of(d.counts.begin(), d.counts.end(),
                                   [](int c) { return c % 2 == 1; });
        CHECK((all_even || all_odd));
        (all_even ? even : odd) += 1;
    }
    CHECK(even == 57);
    CHECK(odd == 35);

    // the all-theta-plus pattern comes first
    CHECK(dists[0].counts == std::vector<int>{4, 2, 2, 2, 2, 2, 2, 2});
    CHECK(dists[0].eps == std::vector<int>(7, 2));
    // flipping eps_2 to theta_minus gives the all-odd example
    CHECK(dists[1].counts == std::vector<int>{3, 3, 1, 1, 3, 1, 3, 3});
    CHECK(dists[1].eps == std::vector<int>{-6, 2, 2, 2, 2, 2, 2});

    // the classical sample distribution appears up to coset relabeling
    std::vector<int> typical = {2, 2, 2, 4, 2, 0, 4, 2};
    std::sort(typical.begin(), typical.end());
    bool seen = false;
    for (const auto& d : dists) {
        auto s = d.counts;
        std::sort(s.begin(), s.end());
        if (s == typical) seen = true;
    }
    CHECK(seen);
}

TEST_CASE("involution profile of g192's first quotient") {
    GroupTable g192 = test::make_g192();
    QuotientMap Q = quotient_map(g192, elementary_abelian_quotients(g192, 3).front());
    FeasibilityProfile prof = involution_profile(g192, Q);
    REQUIRE(prof.cosets.size() == 8);
    // identity coset: 7 available involutions (N is elementary abelian)
    CHECK(prof.cosets[0].involutions == 7);
    CHECK(prof.cosets[0].pairs == 0);
    int with_eight = 0, with_none = 0;
    for (int c = 1; c < 8; ++c) {
        CHECK(2 * prof.cosets[c].pairs + prof.cosets[c].involutions == 8);
        if (prof.cosets[c].involutions == 8) ++with_eight;
        if (prof.cosets[c].involutions == 0) {
            CHECK(prof.cosets[c].pairs == 4);
            ++with_none;
        }
    }
    CHECK(with_eight == 1);
    CHECK(with_none == 6);
}

TEST_CASE("identity coset has 7 involutions exactly when N is elementary abelian") {
    GroupTable g192 = test::make_g192();
    for (const SubgroupHandle& N : elementary_abelian_quotients(g192, 3)) {
        QuotientMap Q = quotient_map(g192, N);
        FeasibilityProfile prof = involution_profile(g192, Q);
        bool n_elem_abelian = true;
        for (elem_t e : N.elements)
            if (g192.elt_order[e] > 2) n_elem_abelian = false;
        CHECK((prof.cosets[0].involutions == 7) == n_elem_abelian);
    }
}

TEST_CASE("C2^3 with trivial subgroup: every nonidentity coset is one involution") {
    GroupTable c2_3 = construct_from_spec("C2xC2xC2", "c2_3");
    QuotientMap Q = quotient_map(c2_3, subgroup_closure(c2_3, {}));
    FeasibilityProfile prof = involution_profile(c2_3, Q);
    for (int c = 1; c < 8; ++c) {
        CHECK(prof.cosets[c].involutions == 1);
        CHECK(prof.cosets[c].pairs == 0);
    }
}

TEST_CASE("distribution filtering reproduces the 57/92 counts") {
    CharacterMatrix H = character_matrix(3);
    PdsParams p = PdsParams::nlst(64, 18, 2, 6);
    auto dists = enumerate_distributions(H, p);

    GroupTable g192 = test::make_g192();
    QuotientMap Q = quotient_map(g192, elementary_abelian_quotients(g192, 3).front());
    FeasibilityProfile prof = involution_profile(g192, Q);

    auto paper = filter_distributions(dists, prof, FilterMode::PaperFaithful);
    CHECK(paper.size() == 57);
    auto exact = filter_distributions(dists, prof, FilterMode::Exact);
    CHECK(exact.size() == 57);
    // exact filtering only removes, never adds
    for (const auto& d : exact)
        CHECK(std::find(paper.begin(), paper.end(), d) != paper.end());

    // a profile with involutions everywhere keeps all-odd vectors too
    FeasibilityProfile all_inv;
    all_inv.cosets.assign(8, CosetProfile{8, 0});
    all_inv.cosets[0] = CosetProfile{7, 0};
    CHECK(filter_distributions(dists, all_inv, FilterMode::PaperFaithful).size() == 92);

    // all-odd vectors die on a zero-involution coset
    std::vector<Distribution> odd_only = {dists[1]};  // [3,3,1,1,3,1,3,3]
    CHECK(filter_distributions(odd_only, prof, FilterMode::PaperFaithful).empty());
}
