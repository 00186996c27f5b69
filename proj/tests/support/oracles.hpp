// Test-only oracles and fixtures, kept independent of the implementation
// paths they check.
#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "pds/constructors.hpp"
#include "pds/graph.hpp"
#include "pds/group.hpp"
#include "pds/group_ring.hpp"

namespace pds::test {

inline GroupTable make_c2_4() { return construct_from_spec("C2xC2xC2xC2", "c2_4"); }
inline GroupTable make_c4xc2xc2() { return construct_from_spec("C4xC2xC2", "c4xc2xc2"); }
inline GroupTable make_c8xc8() { return construct_from_spec("C8xC8", "c8xc8"); }
inline GroupTable make_g192() { return construct_from_spec("C4xC4xC2xC2", "g192"); }

// modular group of order 16: C8 x| C2, generator acting as a -> a^5
inline GroupTable make_m4_2() {
    GroupTable c8 = cyclic(8), c2 = cyclic(2);
    Automorphism id, pow5;
    for (int i = 0; i < 8; ++i) {
        id.perm.push_back(static_cast<elem_t>(i));
        pow5.perm.push_back(static_cast<elem_t>(5 * i % 8));
    }
    return semidirect_product(c8, c2, {id, pow5}, "m4_2");
}

// dihedral group with rotation subgroup Cn
inline GroupTable make_dihedral(int n) { return dihedral(2 * n, "d" + std::to_string(n)); }

// nonabelian order-16 groups with C2^3 images, for desk-scale oracle runs
inline GroupTable make_d4xc2() { return direct_product(dihedral(8, "d4"), cyclic(2), "d4xc2"); }
inline GroupTable make_q8xc2() { return direct_product(quaternion(8), cyclic(2), "q8xc2"); }

// nonabelian order-64 group with a C2^3 image
inline GroupTable make_d16xc2() { return direct_product(dihedral(32, "d16"), cyclic(2), "d16xc2"); }

// the two reference verification sets in C8xC8, x^a y^b -> index 8a+b
inline std::vector<elem_t> real_pds() {
    const int ab[18][2] = {{1, 4}, {4, 1}, {2, 2}, {2, 4}, {4, 2}, {3, 1}, {1, 3}, {3, 4}, {5, 4},
                           {4, 3}, {4, 5}, {6, 4}, {4, 6}, {7, 4}, {4, 7}, {6, 6}, {7, 5}, {5, 7}};
    std::vector<elem_t> out;
    for (auto& e : ab) out.push_back(static_cast<elem_t>(e[0] * 8 + e[1]));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<elem_t> fake_pds() {
    const int ab[18][2] = {{2, 4}, {6, 4}, {4, 2}, {4, 6}, {6, 2}, {2, 6}, {4, 1}, {4, 3}, {4, 5},
                           {4, 7}, {1, 4}, {3, 4}, {5, 4}, {7, 4}, {7, 1}, {3, 5}, {5, 3}, {1, 7}};
    std::vector<elem_t> out;
    for (auto& e : ab) out.push_back(static_cast<elem_t>(e[0] * 8 + e[1]));
    std::sort(out.begin(), out.end());
    return out;
}

// a 5x5 Latin square with identity at 0 that is not associative
inline std::vector<std::vector<int>> nonassociative_loop5() {
    return {{0, 1, 2, 3, 4},
            {1, 0, 3, 4, 2},
            {2, 3, 4, 0, 1},
            {3, 4, 1, 2, 0},
            {4, 2, 0, 1, 3}};
}

// brute-force oracle for (16,5,0,2): every inverse-closed 5-subset of the
// nonidentity elements passing the group-ring identity via direct
// convolution; completely independent of the search path
inline std::vector<std::vector<elem_t>> oracle_16_5_0_2(const GroupTable& G) {
    const PdsParams p = PdsParams::nlst(16, 5, 0, 2);
    std::vector<std::vector<elem_t>> out;
    for (int a = 1; a < 16; ++a)
        for (int b = a + 1; b < 16; ++b)
            for (int c = b + 1; c < 16; ++c)
                for (int d = c + 1; d < 16; ++d)
                    for (int e = d + 1; e < 16; ++e) {
                        std::vector<elem_t> s = {static_cast<elem_t>(a), static_cast<elem_t>(b),
                                                 static_cast<elem_t>(c), static_cast<elem_t>(d),
                                                 static_cast<elem_t>(e)};
                        if (!inverse_closed(G, s)) continue;
                        if (pds_identity_check(G, s, p)) out.push_back(std::move(s));
                    }
    return out;
}

// all subgroups of the given order, by closing every generating set of up
// to max_gens elements (enough for the orders used in tests); growth past
// `order` aborts the closure early
inline std::vector<std::vector<elem_t>> all_subgroups_of_order(const GroupTable& G, int order,
                                                               int max_gens = 3) {
    std::set<std::vector<elem_t>> found;
    std::vector<elem_t> gens;
    auto closure_bounded = [&](const std::vector<elem_t>& gen_set) -> std::vector<elem_t> {
        std::vector<char> in(G.order, 0);
        std::vector<elem_t> elems = {0};
        in[0] = 1;
        for (elem_t g : gen_set)
            if (!in[g]) { in[g] = 1; elems.push_back(g); }
        for (std::size_t i = 0; i < elems.size(); ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                for (elem_t pr : {G.mul(elems[i], elems[j]), G.mul(elems[j], elems[i])}) {
                    if (!in[pr]) {
                        in[pr] = 1;
                        elems.push_back(pr);
                        if (static_cast<int>(elems.size()) > order) return {};
                    }
                }
            }
        }
        std::sort(elems.begin(), elems.end());
        return elems;
    };
    auto rec = [&](auto&& self, int start, int left) -> void {
        std::vector<elem_t> cl = closure_bounded(gens);
        if (static_cast<int>(cl.size()) == order) found.insert(cl);
        if (left == 0) return;
        for (int g = start; g < G.order; ++g) {
            gens.push_back(static_cast<elem_t>(g));
            self(self, g + 1, left - 1);
            gens.pop_back();
        }
    };
    rec(rec, 1, max_gens);
    return {found.begin(), found.end()};
}

// the quotient-detection loop stated directly: N normal of index 2^m with
// every square inside N (exponent-2 quotients are elementary abelian)
inline std::vector<std::vector<elem_t>> slow_c2m_subgroups(const GroupTable& G, int m,
                                                           int max_gens = 3) {
    std::vector<std::vector<elem_t>> out;
    if (G.order % (1 << m) != 0) return out;
    const int target = G.order / (1 << m);
    for (const auto& elems : all_subgroups_of_order(G, target, max_gens)) {
        std::vector<char> in(G.order, 0);
        for (elem_t e : elems) in[e] = 1;
        bool normal = true;
        for (int g = 0; g < G.order && normal; ++g)
            for (elem_t s : elems)
                if (!in[G.mul(G.mul(g, s), G.inverse(g))]) { normal = false; break; }
        if (!normal) continue;
        bool squares_in = true;
        for (int g = 0; g < G.order && squares_in; ++g) squares_in = in[G.mul(g, g)];
        if (squares_in) out.push_back(elems);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// exhaustive isomorphism for tiny graphs (n <= 8)
inline bool isomorphic_exhaustive(const Graph& a, const Graph& b) {
    if (a.n != b.n) return false;
    std::vector<int> perm(a.n);
    for (int i = 0; i < a.n; ++i) perm[i] = i;
    do {
        bool match = true;
        for (int i = 0; i < a.n && match; ++i)
            for (int j = i + 1; j < a.n && match; ++j)
                if (a.edge(i, j) != b.edge(perm[i], perm[j])) match = false;
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline Graph random_graph(int n, double density, std::mt19937& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(density);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.set_edge(i, j);
    return g;
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

} // namespace pds::test
