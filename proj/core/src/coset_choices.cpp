#include "pds/coset_choices.hpp"

#include <algorithm>
#include <functional>

namespace pds {

namespace {

const std::vector<std::vector<elem_t>> kNoChoices;

// all k-subsets of items, lexicographic by index
void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<void(const std::vector<std::size_t>&)>& fn) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    if (k == 0) {
        fn(idx);
        return;
    }
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (idx[i] != i + n - k) break;
            if (i == 0) return;
        }
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

const std::vector<std::vector<elem_t>>& CosetChoiceDB::choices(int coset, int size) const {
    if (coset < 0 || static_cast<std::size_t>(coset) >= table.size()) return kNoChoices;
    const auto& per_size = table[coset];
    if (size < 0 || static_cast<std::size_t>(size) >= per_size.size()) return kNoChoices;
    return per_size[size];
}

CosetChoiceDB build_choices(const GroupTable& G, const QuotientMap& Q) {
    CosetChoiceDB db;
    db.table.resize(Q.coset_count());

    for (int c = 0; c < Q.coset_count(); ++c) {
        std::vector<elem_t> invols;
        std::vector<std::pair<elem_t, elem_t>> pairs;
        for (elem_t e : Q.cosets[c]) {
            if (e == 0) continue;
            if (G.elt_order[e] == 2) invols.push_back(e);
            else if (e < G.inverse(e)) pairs.push_back({e, G.inverse(e)});
        }

        const int cap = static_cast<int>(invols.size() + 2 * pairs.size());
        auto& per_size = db.table[c];
        per_size.resize(cap + 1);

        for (int s = 0; s <= cap; ++s) {
            auto& list = per_size[s];
            for (int j = 0; 2 * j <= s; ++j) {
                const int t = s - 2 * j;  // involutions to take
                if (t > static_cast<int>(invols.size()) || j > static_cast<int>(pairs.size()))
                    continue;
                for_each_combination(invols.size(), t, [&](const std::vector<std::size_t>& iv) {
                    for_each_combination(pairs.size(), j, [&](const std::vector<std::size_t>& pr) {
                        std::vector<elem_t> set;
                        set.reserve(s);
                        for (std::size_t i : iv) set.push_back(invols[i]);
                        for (std::size_t i : pr) {
                            set.push_back(pairs[i].first);
                            set.push_back(pairs[i].second);
                        }
                        std::sort(set.begin(), set.end());
                        list.push_back(std::move(set));
                    });
                });
            }
            std::sort(list.begin(), list.end());
        }
    }
    return db;
}

} // namespace pds
