#include "pds/classify.hpp"

#include <algorithm>
#include <unordered_map>

namespace pds {

namespace {

struct ElemsHash {
    std::size_t operator()(const std::vector<elem_t>& v) const {
        std::size_t h = v.size();
        for (elem_t e : v) h = h * 1000003u + e + 1;
        return h;
    }
};

} // namespace

std::vector<EquivalenceClass> equivalence_classes(const GroupTable& G,
                                                  const std::vector<PdsRecord>& pds_list,
                                                  const PdsParams& p) {
    for (const auto& rec : pds_list)
        if (!pds_identity_check(G, std::span<const elem_t>(rec.elements), p))
            throw PdsNotVerifiedError("record fails the group-ring identity in " + G.id_label);

    std::unordered_map<std::vector<elem_t>, std::vector<int>, ElemsHash> index;
    for (int i = 0; i < static_cast<int>(pds_list.size()); ++i)
        index[pds_list[i].elements].push_back(i);

    const std::vector<Automorphism> aut = automorphism_group(G);

    std::vector<char> found(pds_list.size(), 0);
    std::vector<EquivalenceClass> classes;
    std::vector<elem_t> image;
    for (int i = 0; i < static_cast<int>(pds_list.size()); ++i) {
        if (found[i]) continue;
        EquivalenceClass cls;
        cls.class_id = static_cast<int>(classes.size());
        for (const Automorphism& sigma : aut) {
            image.resize(pds_list[i].elements.size());
            for (std::size_t e = 0; e < image.size(); ++e)
                image[e] = sigma(pds_list[i].elements[e]);
            std::sort(image.begin(), image.end());
            auto it = index.find(image);
            if (it == index.end()) continue;
            for (int j : it->second) {
                if (!found[j]) {
                    found[j] = 1;
                    cls.members.push_back(j);
                }
            }
        }
        std::sort(cls.members.begin(), cls.members.end());
        cls.representative = cls.members.front();
        for (int j : cls.members)
            if (pds_list[j].elements < pds_list[cls.representative].elements)
                cls.representative = j;
        classes.push_back(std::move(cls));
    }
    return classes;
}

std::vector<std::pair<int, int>> disjoint_pairs(const std::vector<PdsRecord>& pds_list,
                                                bool first_only) {
    const int n = static_cast<int>(pds_list.size());
    int max_elem = 0;
    for (const auto& r : pds_list)
        for (elem_t e : r.elements) max_elem = std::max<int>(max_elem, e);
    const int words = max_elem / 64 + 1;

    std::vector<std::uint64_t> masks(static_cast<std::size_t>(n) * words, 0);
    for (int i = 0; i < n; ++i)
        for (elem_t e : pds_list[i].elements)
            masks[static_cast<std::size_t>(i) * words + e / 64] |= std::uint64_t{1} << (e % 64);

    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            bool meets = false;
            for (int w = 0; w < words && !meets; ++w)
                meets = (masks[static_cast<std::size_t>(i) * words + w] &
                         masks[static_cast<std::size_t>(j) * words + w]) != 0;
            if (!meets) {
                out.push_back({i, j});
                if (first_only) return out;
            }
        }
    }
    return out;
}

std::optional<Breakdown> hadamard_breakdown(const GroupTable& G, std::span<const elem_t> D) {
    if (D.size() % 3 != 0 || D.empty()) return std::nullopt;
    const int part_size = static_cast<int>(D.size()) / 3;

    for (const SubgroupHandle& R : elementary_abelian_quotients(G, 2)) {
        QuotientMap Q = quotient_map(G, R);

        std::array<std::vector<elem_t>, 4> by_coset;
        for (elem_t d : D) by_coset[Q.coset_of[d]].push_back(d);
        if (!by_coset[0].empty()) continue;
        bool even_split = true;
        for (int c = 1; c <= 3 && even_split; ++c)
            even_split = static_cast<int>(by_coset[c].size()) == part_size;
        if (!even_split) continue;

        // each part's differences must cover every nonidentity element of R
        // exactly twice: three (|R|, |R|*3/8, 2)-style difference sets
        bool all_cover = true;
        for (int c = 1; c <= 3 && all_cover; ++c) {
            std::vector<int> hits(G.order, 0);
            const auto& part = by_coset[c];
            for (elem_t a : part)
                for (elem_t b : part)
                    if (a != b) ++hits[G.mul(a, G.inverse(b))];
            for (elem_t r : R.elements)
                if (r != 0 && hits[r] != 2) { all_cover = false; break; }
        }
        if (!all_cover) continue;

        Breakdown bd;
        bd.subgroup = R;
        for (int c = 1; c <= 3; ++c) {
            bd.parts[c - 1] = by_coset[c];
            bd.coset_labels[c - 1] = Q.coset_log[c];
        }
        return bd;
    }
    return std::nullopt;
}

} // namespace pds
