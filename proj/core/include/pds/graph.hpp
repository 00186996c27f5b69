#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pds/group.hpp"

namespace pds {

/// A simple undirected graph on up to a few hundred vertices, adjacency
/// kept as packed bit rows.
struct Graph {
    int n = 0;
    int words = 0;                // 64-bit words per row
    std::vector<std::uint64_t> bits;

    Graph() = default;
    explicit Graph(int vertices);

    bool edge(int i, int j) const {
        return (bits[static_cast<std::size_t>(i) * words + (j >> 6)] >> (j & 63)) & 1u;
    }
    void set_edge(int i, int j);
    const std::uint64_t* row(int i) const { return bits.data() + static_cast<std::size_t>(i) * words; }

    int degree(int i) const;
    std::uint64_t edge_count() const;
    bool operator==(const Graph&) const = default;
};

/// Cayley graph of a connection set: vertices are group elements, g ~ h iff
/// g*h^(-1) is in D. D must be inverse-closed and identity-free so the
/// graph is undirected and loop-free. Throws NotInverseClosedError.
Graph cayley_graph(const GroupTable& G, std::span<const elem_t> D);

struct SrgParams {
    int v = 0, k = 0, lambda = 0, mu = 0;
    bool operator==(const SrgParams&) const = default;
};

/// Exact strongly-regular parameters by checking regularity and
/// common-neighbor counts over all vertex pairs; nullopt when any pair
/// deviates.
std::optional<SrgParams> srg_params(const Graph& g);

/// Canonical form: the graph6 encoding of a canonically relabeled copy.
/// Invariant under vertex relabeling; equal forms iff isomorphic. Computed
/// by iterated color refinement with individualization backtracking, taking
/// the minimal leaf over the full branch tree.
std::string canonical_form(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

/// Relabel: vertex i of the result is vertex perm[i] of g (test helper and
/// canonicalization primitive).
Graph relabel(const Graph& g, std::span<const int> perm);

} // namespace pds
