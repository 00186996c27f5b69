// Census walk shared by the acceptance suite and its smoke test: search
// every order-v catalog group, classify, and aggregate the totals that
// published tables report.
#pragma once

#include <set>
#include <string>

#include "pds/catalog.hpp"
#include "pds/classify.hpp"
#include "pds/graph.hpp"
#include "pds/search.hpp"

namespace pds::test {

struct CensusTotals {
    std::uint64_t total_pds = 0;
    int groups_with_pds = 0;
    int abelian_with_pds = 0;
    int nonabelian_classes = 0;
    int abelian_classes = 0;
    int groups_with_disjoint = 0;
    bool complements_ok = true;   // every disjoint pair's complement is a reversible DS
    std::set<std::string> srg_forms;
    int c24_image_classes = 0;    // inequivalent PDSs in groups with C2^4 images
    int c24_image_breakdowns = 0;
    bool breakdown_confined = true;  // no breakdowns outside C2^4-image groups
};

inline CensusTotals run_census(const GroupCatalog& cat, const PdsParams& p,
                               const SearchConfig& cfg) {
    CensusTotals t;
    for (const auto& entry : cat.entries) {
        GroupTable G = cat.load(entry);
        if (G.order != p.v) continue;
        SearchResult res;
        try {
            res = search_group(G, p, cfg);
        } catch (const NoElementaryAbelianImageError&) {
            continue;
        }
        if (res.pds_list.empty()) continue;

        t.total_pds += res.pds_list.size();
        ++t.groups_with_pds;
        bool abelian = true;
        for (int a = 0; a < G.order && abelian; ++a)
            for (int b = 0; b < a; ++b)
                if (G.mul(a, b) != G.mul(b, a)) { abelian = false; break; }
        if (abelian) ++t.abelian_with_pds;

        auto classes = equivalence_classes(G, res.pds_list, p);
        (abelian ? t.abelian_classes : t.nonabelian_classes) += static_cast<int>(classes.size());

        auto pairs = disjoint_pairs(res.pds_list, false);
        if (!pairs.empty()) {
            ++t.groups_with_disjoint;
            for (auto [i, j] : pairs)
                if (!complement_reversible_ds_check(G, res.pds_list[i].elements,
                                                    res.pds_list[j].elements))
                    t.complements_ok = false;
        }

        bool has_c24 = !elementary_abelian_quotients(G, 4).empty();
        for (const auto& cls : classes) {
            const auto& rep = res.pds_list[cls.representative];
            t.srg_forms.insert(canonical_form(cayley_graph(G, rep.elements)));
            bool bd = hadamard_breakdown(G, rep.elements).has_value();
            if (has_c24) {
                ++t.c24_image_classes;
                t.c24_image_breakdowns += bd ? 1 : 0;
            } else if (bd) {
                t.breakdown_confined = false;
            }
        }
    }
    return t;
}

} // namespace pds::test
