#include "pds/graph.hpp"

#include <algorithm>
#include <bit>

#include "pds/graph6.hpp"
#include "pds/group_ring.hpp"

namespace pds {

Graph::Graph(int vertices)
    : n(vertices), words((vertices + 63) / 64),
      bits(static_cast<std::size_t>(vertices) * ((vertices + 63) / 64), 0) {}

void Graph::set_edge(int i, int j) {
    bits[static_cast<std::size_t>(i) * words + (j >> 6)] |= std::uint64_t{1} << (j & 63);
    bits[static_cast<std::size_t>(j) * words + (i >> 6)] |= std::uint64_t{1} << (i & 63);
}

int Graph::degree(int i) const {
    int d = 0;
    for (int w = 0; w < words; ++w) d += std::popcount(row(i)[w]);
    return d;
}

std::uint64_t Graph::edge_count() const {
    std::uint64_t total = 0;
    for (int i = 0; i < n; ++i) total += degree(i);
    return total / 2;
}

Graph cayley_graph(const GroupTable& G, std::span<const elem_t> D) {
    for (elem_t d : D)
        if (d == 0) throw NotInverseClosedError("connection set contains the identity");
    if (!inverse_closed(G, D)) throw NotInverseClosedError("connection set is not inverse-closed");

    Graph g(G.order);
    // g ~ h iff g*h^-1 in D, i.e. the neighbors of h are d*h
    for (int h = 0; h < G.order; ++h)
        for (elem_t d : D) g.set_edge(G.mul(d, h), h);
    return g;
}

namespace {

int common_neighbors(const Graph& g, int i, int j) {
    int c = 0;
    for (int w = 0; w < g.words; ++w) c += std::popcount(g.row(i)[w] & g.row(j)[w]);
    return c;
}

} // namespace

std::optional<SrgParams> srg_params(const Graph& g) {
    if (g.n < 2) return SrgParams{g.n, 0, 0, 0};
    const int k = g.degree(0);
    for (int i = 1; i < g.n; ++i)
        if (g.degree(i) != k) return std::nullopt;

    int lambda = -1, mu = -1;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) {
            int c = common_neighbors(g, i, j);
            int& slot = g.edge(i, j) ? lambda : mu;
            if (slot < 0) slot = c;
            else if (slot != c) return std::nullopt;
        }
    return SrgParams{g.n, k, std::max(lambda, 0), std::max(mu, 0)};
}

Graph relabel(const Graph& g, std::span<const int> perm) {
    Graph out(g.n);
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (g.edge(perm[i], perm[j])) out.set_edge(i, j);
    return out;
}

namespace {

// 1-WL color refinement to a stable partition. The previous color leads
// every signature, so a stable partition reproduces itself exactly.
void refine_colors(const Graph& g, std::vector<int>& colors) {
    const int n = g.n;
    std::vector<int> keys;  // n rows of width 1 + ncolors, flat
    std::vector<int> order(n), next(n);
    while (true) {
        const int ncolors = 1 + *std::max_element(colors.begin(), colors.end());
        const int width = 1 + ncolors;
        keys.assign(static_cast<std::size_t>(n) * width, 0);
        for (int v = 0; v < n; ++v) {
            int* key = keys.data() + static_cast<std::size_t>(v) * width;
            key[0] = colors[v];
            const std::uint64_t* row = g.row(v);
            for (int w = 0; w < g.words; ++w) {
                std::uint64_t bitsw = row[w];
                while (bitsw) {
                    int u = w * 64 + std::countr_zero(bitsw);
                    bitsw &= bitsw - 1;
                    ++key[1 + colors[u]];
                }
            }
        }
        auto key_less = [&](int a, int b) {
            const int* ka = keys.data() + static_cast<std::size_t>(a) * width;
            const int* kb = keys.data() + static_cast<std::size_t>(b) * width;
            return std::lexicographical_compare(ka, ka + width, kb, kb + width);
        };
        auto key_eq = [&](int a, int b) {
            const int* ka = keys.data() + static_cast<std::size_t>(a) * width;
            const int* kb = keys.data() + static_cast<std::size_t>(b) * width;
            return std::equal(ka, ka + width, kb);
        };
        for (int v = 0; v < n; ++v) order[v] = v;
        std::sort(order.begin(), order.end(), key_less);

        int rank = 0;
        next[order[0]] = 0;
        for (int i = 1; i < n; ++i) {
            if (!key_eq(order[i], order[i - 1])) ++rank;
            next[order[i]] = rank;
        }
        if (next == colors) return;
        colors = next;
    }
}

struct CanonSearch {
    const Graph& g;
    std::string best;
    std::vector<int> best_perm;

    void leaf(const std::vector<int>& colors) {
        std::vector<int> perm(g.n);
        for (int v = 0; v < g.n; ++v) perm[colors[v]] = v;
        std::string s = emit_graph6(relabel(g, perm));
        if (best.empty() || s < best) {
            best = std::move(s);
            best_perm = std::move(perm);
        }
    }

    void descend(std::vector<int> colors) {
        refine_colors(g, colors);

        // first non-singleton cell, by color id
        int target = -1;
        std::vector<int> cell_size(g.n, 0);
        for (int c : colors) ++cell_size[c];
        for (int v = 0; v < g.n; ++v) {
            if (cell_size[colors[v]] > 1 && (target < 0 || colors[v] < target)) target = colors[v];
        }
        if (target < 0) { leaf(colors); return; }

        for (int v = 0; v < g.n; ++v) {
            if (colors[v] != target) continue;
            std::vector<int> child(colors);
            for (int u = 0; u < g.n; ++u) {
                if (child[u] > target) ++child[u];
                else if (child[u] == target && u != v) child[u] = target + 1;
            }
            descend(std::move(child));
        }
    }
};

// canonical labeling of one connected graph: minimal leaf over the
// individualization-refinement branch tree
std::vector<int> canonical_perm_connected(const Graph& g) {
    CanonSearch cs{g, {}, {}};
    cs.descend(std::vector<int>(g.n, 0));
    return cs.best_perm;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<int> comp(g.n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack = {s}, members;
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int u = 0; u < g.n; ++u)
                if (g.edge(v, u) && comp[u] < 0) {
                    comp[u] = comp[s];
                    stack.push_back(u);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

} // namespace

std::string canonical_form(const Graph& g) {
    if (g.n == 0) return emit_graph6(g);

    // canonicalize per connected component, then order the blocks by
    // (size, canonical string); equal components collapse to equal blocks,
    // so the assembled labeling is still isomorphism-invariant
    auto comps = connected_components(g);
    struct Block {
        int size;
        std::string form;
        std::vector<int> order;  // original vertex ids in canonical order
    };
    std::vector<Block> blocks;
    for (const auto& members : comps) {
        Graph sub(static_cast<int>(members.size()));
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (g.edge(members[i], members[j])) sub.set_edge(static_cast<int>(i),
                                                                 static_cast<int>(j));
        std::vector<int> perm = canonical_perm_connected(sub);
        Block b;
        b.size = sub.n;
        b.form = emit_graph6(relabel(sub, perm));
        for (int i = 0; i < sub.n; ++i) b.order.push_back(members[perm[i]]);
        blocks.push_back(std::move(b));
    }
    std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
        if (a.size != b.size) return a.size < b.size;
        return a.form < b.form;
    });
    std::vector<int> global;
    for (const auto& b : blocks) global.insert(global.end(), b.order.begin(), b.order.end());
    return emit_graph6(relabel(g, global));
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int i = 0; i < a.n; ++i) { da.push_back(a.degree(i)); db.push_back(b.degree(i)); }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace pds
