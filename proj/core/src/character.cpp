#include "pds/character.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace pds {

std::vector<std::uint32_t> canonical_element_order(int m) {
    // m = 3 follows the classical listing {1, x, y, z, xy, yz, xz, xyz};
    // other exponents use plain counter order (bit i = generator i).
    if (m == 3) return {0, 1, 2, 4, 3, 6, 5, 7};
    std::vector<std::uint32_t> order(static_cast<std::size_t>(1) << m);
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    return order;
}

namespace {

std::vector<std::uint32_t> canonical_character_order(int m) {
    // the matching character row order for m = 3: {1, x, y, z, yz, xz, xy, xyz}
    if (m == 3) return {0, 1, 2, 4, 6, 5, 3, 7};
    return canonical_element_order(m);
}

} // namespace

CharacterMatrix character_matrix(int m) {
    if (m < 0 || m > 6) throw Error("character_matrix: exponent out of range");
    CharacterMatrix M;
    M.m = m;
    M.row_masks = canonical_character_order(m);
    M.col_masks = canonical_element_order(m);
    const int q = M.dim();
    M.h.resize(static_cast<std::size_t>(q) * q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            int parity = std::popcount(M.row_masks[i] & M.col_masks[j]) & 1;
            M.h[static_cast<std::size_t>(i) * q + j] = parity ? -1 : 1;
        }
    return M;
}

std::vector<Distribution> enumerate_distributions(const CharacterMatrix& H, const PdsParams& p) {
    const int q = H.dim();
    std::vector<Distribution> out;
    std::vector<std::int64_t> u(q), v(q);

    const std::uint64_t patterns = 1ull << (q - 1);
    for (std::uint64_t pat = 0; pat < patterns; ++pat) {
        u[0] = p.k;
        for (int i = 1; i < q; ++i)
            u[i] = ((pat >> (i - 1)) & 1) ? p.theta_minus : p.theta_plus;

        // v = (1/2^m) H^T u, exact integers only
        bool ok = true;
        for (int j = 0; j < q && ok; ++j) {
            std::int64_t s = 0;
            for (int i = 0; i < q; ++i) s += H.at(i, j) * u[i];
            if (s < 0 || s % q != 0) { ok = false; break; }
            v[j] = s / q;
        }
        if (!ok) continue;

        Distribution d;
        d.counts.assign(v.begin(), v.end());
        d.eps.assign(u.begin() + 1, u.end());
        out.push_back(std::move(d));
    }

    // H is invertible, so distinct sign patterns give distinct v; assert
    // the dedup step is a no-op rather than silently guessing
    std::set<std::vector<int>> uniq;
    for (const auto& d : out) uniq.insert(d.counts);
    if (uniq.size() != out.size()) throw Error("duplicate distributions from distinct sign patterns");
    return out;
}

FeasibilityProfile involution_profile(const GroupTable& G, const QuotientMap& Q) {
    FeasibilityProfile prof;
    prof.cosets.resize(Q.coset_count());
    for (int c = 0; c < Q.coset_count(); ++c) {
        int invol = 0, single = 0;
        for (elem_t e : Q.cosets[c]) {
            if (e == 0) continue;  // identity never available
            if (G.elt_order[e] == 2) ++invol;
            else ++single;
        }
        prof.cosets[c].involutions = invol;
        prof.cosets[c].pairs = single / 2;  // inverses stay within the coset
    }
    return prof;
}

namespace {

bool coset_feasible_exact(int count, const CosetProfile& c) {
    if (count < 0 || count > c.capacity()) return false;
    for (int s = count & 1; s <= std::min(c.involutions, count); s += 2)
        if ((count - s) / 2 <= c.pairs) return true;
    return false;
}

} // namespace

std::vector<Distribution> filter_distributions(const std::vector<Distribution>& ds,
                                               const FeasibilityProfile& prof, FilterMode mode) {
    std::vector<Distribution> out;
    for (const auto& d : ds) {
        bool keep = true;
        for (std::size_t j = 0; j < d.counts.size() && keep; ++j) {
            const CosetProfile& c = prof.cosets[j];
            if (mode == FilterMode::PaperFaithful)
                keep = (d.counts[j] % 2 == 0) || c.involutions > 0;
            else
                keep = coset_feasible_exact(d.counts[j], c);
        }
        if (keep) out.push_back(d);
    }
    return out;
}

} // namespace pds
