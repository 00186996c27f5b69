#include "pds/group.hpp"

#include <algorithm>
#include <set>

#include "pds/character.hpp"  // canonical_element_order

namespace pds {

namespace {

constexpr int kAssocCheckLimit = 256;

void validate_latin(const GroupTable& G) {
    const int n = G.order;
    std::vector<char> seen(n);
    for (int g = 0; g < n; ++g) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int h = 0; h < n; ++h) {
            elem_t p = G.mul(g, h);
            if (seen[p]) throw NotAGroupError("row " + std::to_string(g) + " is not a permutation");
            seen[p] = 1;
        }
        std::fill(seen.begin(), seen.end(), 0);
        for (int h = 0; h < n; ++h) {
            elem_t p = G.mul(h, g);
            if (seen[p]) throw NotAGroupError("column " + std::to_string(g) + " is not a permutation");
            seen[p] = 1;
        }
    }
}

void validate_associativity(const GroupTable& G) {
    const int n = G.order;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            elem_t ab = G.mul(a, b);
            for (int c = 0; c < n; ++c)
                if (G.mul(ab, c) != G.mul(a, G.mul(b, c)))
                    throw NotAGroupError("table is not associative");
        }
}

} // namespace

GroupTable build_group(const std::vector<std::vector<int>>& table, std::string id_label,
                       bool paranoid) {
    const std::size_t n = table.size();
    if (n == 0) throw NotAGroupError("empty table");
    if (n > 0xFFFF) throw NotAGroupError("order too large");

    GroupTable G;
    G.order = static_cast<int>(n);
    G.id_label = std::move(id_label);
    G.mult.resize(n * n);
    for (std::size_t g = 0; g < n; ++g) {
        if (table[g].size() != n) throw NotAGroupError("table is not square");
        for (std::size_t h = 0; h < n; ++h) {
            int p = table[g][h];
            if (p < 0 || static_cast<std::size_t>(p) >= n)
                throw NotAGroupError("entry out of range");
            G.mult[g * n + h] = static_cast<elem_t>(p);
        }
    }

    for (int g = 0; g < G.order; ++g)
        if (G.mul(0, g) != g || G.mul(g, 0) != g)
            throw NotAGroupError("index 0 is not a two-sided identity");

    validate_latin(G);
    if (G.order <= kAssocCheckLimit || paranoid) validate_associativity(G);

    G.inv.resize(n);
    for (int g = 0; g < G.order; ++g) {
        int found = -1;
        for (int h = 0; h < G.order; ++h) {
            if (G.mul(g, h) == 0) { found = h; break; }
        }
        if (found < 0 || G.mul(found, g) != 0)
            throw NotAGroupError("element without a two-sided inverse");
        G.inv[g] = static_cast<elem_t>(found);
    }

    G.elt_order.resize(n);
    for (int g = 0; g < G.order; ++g) {
        int k = 1;
        elem_t p = static_cast<elem_t>(g);
        while (p != 0) { p = G.mul(p, g); ++k; }
        G.elt_order[g] = k;
    }
    return G;
}

bool SubgroupHandle::contains(elem_t g) const {
    return std::binary_search(elements.begin(), elements.end(), g);
}

namespace {

bool is_normal_in(const GroupTable& G, const std::vector<char>& in_set,
                  const std::vector<elem_t>& elems) {
    for (int g = 0; g < G.order; ++g) {
        elem_t gi = G.inverse(g);
        for (elem_t s : elems)
            if (!in_set[G.mul(G.mul(g, s), gi)]) return false;
    }
    return true;
}

SubgroupHandle close_set(const GroupTable& G, std::vector<char> in_set) {
    std::vector<elem_t> elems;
    for (int g = 0; g < G.order; ++g)
        if (in_set[g]) elems.push_back(static_cast<elem_t>(g));

    // close under products; inverses follow in a finite group
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            elem_t p = G.mul(elems[i], elems[j]);
            if (!in_set[p]) { in_set[p] = 1; elems.push_back(p); }
            elem_t q = G.mul(elems[j], elems[i]);
            if (!in_set[q]) { in_set[q] = 1; elems.push_back(q); }
        }

    std::sort(elems.begin(), elems.end());
    SubgroupHandle H;
    H.is_normal = is_normal_in(G, in_set, elems);
    H.elements = std::move(elems);
    return H;
}

} // namespace

SubgroupHandle subgroup_closure(const GroupTable& G, std::span<const elem_t> gens) {
    std::vector<char> in_set(G.order, 0);
    in_set[0] = 1;
    for (elem_t g : gens) {
        if (g >= G.order) throw Error("generator index out of range");
        in_set[g] = 1;
    }
    return close_set(G, std::move(in_set));
}

SubgroupHandle agemo_commutator_subgroup(const GroupTable& G) {
    std::vector<char> in_set(G.order, 0);
    in_set[0] = 1;
    for (int g = 0; g < G.order; ++g) {
        in_set[G.mul(g, g)] = 1;
        elem_t gi = G.inverse(g);
        for (int h = 0; h < G.order; ++h)
            in_set[G.mul(G.mul(g, h), G.mul(gi, G.inverse(h)))] = 1;
    }
    return close_set(G, std::move(in_set));
}

namespace {

// Cosets of a subgroup in discovery order: coset 0 contains the identity,
// later cosets appear in order of their least element.
struct RawCosets {
    std::vector<int> coset_of;
    std::vector<std::vector<elem_t>> cosets;
};

RawCosets raw_cosets(const GroupTable& G, const SubgroupHandle& N) {
    RawCosets rc;
    rc.coset_of.assign(G.order, -1);
    for (int g = 0; g < G.order; ++g) {
        if (rc.coset_of[g] >= 0) continue;
        int c = static_cast<int>(rc.cosets.size());
        std::vector<elem_t> coset;
        for (elem_t s : N.elements) {  // right coset Ng
            elem_t e = G.mul(s, g);
            rc.coset_of[e] = c;
            coset.push_back(e);
        }
        std::sort(coset.begin(), coset.end());
        rc.cosets.push_back(std::move(coset));
    }
    return rc;
}

} // namespace

std::vector<SubgroupHandle> elementary_abelian_quotients(const GroupTable& G, int m) {
    std::vector<SubgroupHandle> out;
    if (m < 0) return out;
    const int index = 1 << m;
    if (G.order % index != 0) return out;

    SubgroupHandle K = agemo_commutator_subgroup(G);
    // every valid N contains K, and subgroups between K and G correspond to
    // subspaces of the F2 vector space G/K
    const int ksize = static_cast<int>(K.size());
    if (G.order % ksize != 0) return out;
    const int qsize = G.order / ksize;  // = 2^d
    int d = 0;
    while ((1 << d) < qsize) ++d;
    if ((1 << d) != qsize) return out;  // cannot happen for 2-groups with EA quotient
    const int dd = d - m;               // dimension of N/K
    if (dd < 0) return out;

    RawCosets rc = raw_cosets(G, K);

    // coordinates of each K-coset over a greedy F2 basis
    auto qmul = [&](int a, int b) {
        return rc.coset_of[G.mul(rc.cosets[a][0], rc.cosets[b][0])];
    };
    std::vector<std::uint32_t> coord(qsize, 0);
    std::vector<int> coset_for_mask(static_cast<std::size_t>(1) << d, 0);
    std::vector<char> spanned(qsize, 0);
    spanned[0] = 1;
    int gens_found = 0;
    for (int c = 1; c < qsize && gens_found < d; ++c) {
        if (spanned[c]) continue;
        int bit = gens_found++;
        // extend the span by the new generator
        std::vector<int> old_masks;
        for (std::uint32_t msk = 0; msk < (1u << bit); ++msk) old_masks.push_back(coset_for_mask[msk]);
        for (std::uint32_t msk = 0; msk < (1u << bit); ++msk) {
            int nc = qmul(coset_for_mask[msk], c);
            std::uint32_t nm = msk | (1u << bit);
            coord[nc] = nm;
            coset_for_mask[nm] = nc;
            spanned[nc] = 1;
        }
    }

    // enumerate all dd-dimensional subspaces of F2^d by spanning tuples,
    // deduplicated by their sorted mask list
    std::set<std::vector<std::uint32_t>> subspaces;
    auto collect = [&](auto&& self, std::vector<std::uint32_t>& basis, std::uint32_t start) -> void {
        if (static_cast<int>(basis.size()) == dd) {
            std::vector<std::uint32_t> span;
            for (std::uint32_t msk = 0; msk < (1u << dd); ++msk) {
                std::uint32_t x = 0;
                for (int b = 0; b < dd; ++b)
                    if (msk & (1u << b)) x ^= basis[b];
                span.push_back(x);
            }
            std::sort(span.begin(), span.end());
            span.erase(std::unique(span.begin(), span.end()), span.end());
            if (static_cast<int>(span.size()) == (1 << dd)) subspaces.insert(std::move(span));
            return;
        }
        for (std::uint32_t x = start; x < (1u << d); ++x) {
            basis.push_back(x);
            self(self, basis, x + 1);
            basis.pop_back();
        }
    };
    std::vector<std::uint32_t> basis;
    collect(collect, basis, 1);
    if (dd == 0) subspaces.insert({0});

    for (const auto& span : subspaces) {
        SubgroupHandle N;
        for (std::uint32_t msk : span) {
            const auto& cs = rc.cosets[coset_for_mask[msk]];
            N.elements.insert(N.elements.end(), cs.begin(), cs.end());
        }
        std::sort(N.elements.begin(), N.elements.end());
        N.is_normal = true;  // contains the commutator subgroup
        out.push_back(std::move(N));
    }
    std::sort(out.begin(), out.end(),
              [](const SubgroupHandle& a, const SubgroupHandle& b) { return a.elements < b.elements; });
    return out;
}

int QuotientMap::coset_mul(int a, int b) const {
    std::uint32_t target = coset_log[a] ^ coset_log[b];
    for (int c = 0; c < coset_count(); ++c)
        if (coset_log[c] == target) return c;
    return -1;
}

QuotientMap quotient_map(const GroupTable& G, const SubgroupHandle& N) {
    std::vector<char> in_set(G.order, 0);
    for (elem_t s : N.elements) in_set[s] = 1;
    if (N.elements.empty() || !in_set[0]) throw NotNormalError("not a subgroup");
    if (!is_normal_in(G, in_set, N.elements)) throw NotNormalError("subgroup is not normal");
    if (G.order % static_cast<int>(N.size()) != 0)
        throw NotNormalError("subgroup order does not divide group order");

    const int q = G.order / static_cast<int>(N.size());
    int m = 0;
    while ((1 << m) < q) ++m;
    if ((1 << m) != q) throw NotElementaryAbelianError("index is not a power of 2");
    for (int g = 0; g < G.order; ++g)
        if (!in_set[G.mul(g, g)])
            throw NotElementaryAbelianError("a square falls outside the subgroup");

    RawCosets rc = raw_cosets(G, N);

    // greedy generator cosets, then exponent masks for every coset
    auto qmul = [&](int a, int b) {
        return rc.coset_of[G.mul(rc.cosets[a][0], rc.cosets[b][0])];
    };
    std::vector<int> coset_for_mask(q, 0);
    std::vector<std::uint32_t> mask_of(q, 0);
    std::vector<char> spanned(q, 0);
    spanned[0] = 1;
    int gens_found = 0;
    for (int c = 1; c < q && gens_found < m; ++c) {
        if (spanned[c]) continue;
        int bit = gens_found++;
        for (std::uint32_t msk = 0; msk < (1u << bit); ++msk) {
            int nc = qmul(coset_for_mask[msk], c);
            std::uint32_t nm = msk | (1u << bit);
            mask_of[nc] = nm;
            coset_for_mask[nm] = nc;
            spanned[nc] = 1;
        }
    }

    // canonical coset order: coset j carries label order[j]
    QuotientMap Q;
    Q.subgroup = N;
    Q.subgroup.is_normal = true;
    Q.m = m;
    Q.coset_log.resize(q);
    Q.cosets.resize(q);
    Q.coset_of.resize(G.order);
    std::vector<std::uint32_t> order = canonical_element_order(m);
    for (int j = 0; j < q; ++j) {
        int oldc = coset_for_mask[order[j]];
        Q.coset_log[j] = order[j];
        Q.cosets[j] = rc.cosets[oldc];
        for (elem_t e : Q.cosets[j]) Q.coset_of[e] = static_cast<elem_t>(j);
    }
    return Q;
}

} // namespace pds
