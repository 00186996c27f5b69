#include "pds/automorphisms.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace pds {

namespace {

constexpr std::size_t kAutLimit = std::size_t{1} << 20;
constexpr elem_t kUnset = 0xFFFF;

struct Backtracker {
    const GroupTable& G;
    std::vector<elem_t> gens;
    std::vector<std::vector<elem_t>> candidates;  // per generator, ascending

    std::vector<elem_t> img;
    std::vector<std::uint8_t> used;
    std::vector<elem_t> mapped;  // elements with images, assignment order
    std::vector<Automorphism> out;

    explicit Backtracker(const GroupTable& g) : G(g) {}

    bool extend(elem_t gen, elem_t image, int level) {
        const std::size_t mark = mapped.size();
        img[gen] = image;
        used[image] = 1;
        mapped.push_back(gen);

        // previously mapped elements now need their products with the new
        // generator checked; elements mapped during this closure need
        // products with every generator so far
        for (std::size_t i = 0; i < mapped.size(); ++i) {
            elem_t a = mapped[i];
            int jfirst = (i < mark) ? level : 0;
            for (int j = jfirst; j <= level; ++j) {
                elem_t b = G.mul(a, gens[j]);
                elem_t want = G.mul(img[a], img[gens[j]]);
                if (img[b] == kUnset) {
                    if (used[want]) { rollback(mark); return false; }
                    img[b] = want;
                    used[want] = 1;
                    mapped.push_back(b);
                } else if (img[b] != want) {
                    rollback(mark);
                    return false;
                }
            }
        }
        return true;
    }

    void rollback(std::size_t mark) {
        for (std::size_t i = mapped.size(); i-- > mark;) {
            used[img[mapped[i]]] = 0;
            img[mapped[i]] = kUnset;
        }
        mapped.resize(mark);
    }

    void recurse(int level) {
        if (level == static_cast<int>(gens.size())) {
            if (out.size() >= kAutLimit)
                throw AutGroupTooLargeError("automorphism group exceeds 2^20 elements");
            Automorphism a;
            a.perm = img;
            out.push_back(std::move(a));
            return;
        }
        elem_t g = gens[level];
        for (elem_t c : candidates[level]) {
            if (used[c]) continue;
            std::size_t mark = mapped.size();
            if (extend(g, c, level)) recurse(level + 1);
            rollback(mark);
        }
    }
};

} // namespace

std::vector<Automorphism> automorphism_group(const GroupTable& G) {
    const int n = G.order;
    if (n > 256) throw Error("automorphism_group: order above 256 not supported");

    // automorphism-invariant element keys: order, square-root count,
    // conjugacy class size
    std::vector<int> sqrt_count(n, 0), conj_size(n, 0);
    for (int h = 0; h < n; ++h) ++sqrt_count[G.mul(h, h)];
    for (int g = 0; g < n; ++g) {
        std::vector<char> seen(n, 0);
        int cnt = 0;
        for (int x = 0; x < n; ++x) {
            elem_t c = G.mul(G.mul(x, g), G.inverse(x));
            if (!seen[c]) { seen[c] = 1; ++cnt; }
        }
        conj_size[g] = cnt;
    }
    using Key = std::array<int, 3>;
    auto key_of = [&](int g) { return Key{G.elt_order[g], sqrt_count[g], conj_size[g]}; };
    std::map<Key, std::vector<elem_t>> by_key;
    for (int g = 0; g < n; ++g) by_key[key_of(g)].push_back(static_cast<elem_t>(g));

    // greedy generating set, descending element order
    std::vector<int> by_order(n);
    for (int g = 0; g < n; ++g) by_order[g] = g;
    std::sort(by_order.begin(), by_order.end(), [&](int a, int b) {
        if (G.elt_order[a] != G.elt_order[b]) return G.elt_order[a] > G.elt_order[b];
        return a < b;
    });

    Backtracker bt(G);
    {
        SubgroupHandle span = subgroup_closure(G, {});
        for (int g : by_order) {
            if (static_cast<int>(span.size()) == n) break;
            if (span.contains(static_cast<elem_t>(g))) continue;
            bt.gens.push_back(static_cast<elem_t>(g));
            std::vector<elem_t> next(span.elements);
            next.push_back(static_cast<elem_t>(g));
            span = subgroup_closure(G, next);
        }
    }
    for (elem_t g : bt.gens) bt.candidates.push_back(by_key[key_of(g)]);

    bt.img.assign(n, kUnset);
    bt.used.assign(n, 0);
    bt.img[0] = 0;
    bt.used[0] = 1;
    bt.mapped.push_back(0);
    bt.recurse(0);
    return std::move(bt.out);
}

} // namespace pds
