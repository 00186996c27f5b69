#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pds/errors.hpp"

namespace pds {

using elem_t = std::uint16_t;

/// A finite group given by its full multiplication table.
///
/// Conventions enforced by build_group:
///  - element indices run 0..order-1 and index 0 is the identity,
///  - mult is row-major: mult[g*order + h] = g*h,
///  - inverses and element orders are precomputed.
struct GroupTable {
    int order = 0;
    std::vector<elem_t> mult;    // order*order, row-major
    std::vector<elem_t> inv;     // per-element inverse
    std::vector<int> elt_order;  // per-element multiplicative order
    std::string id_label;

    elem_t mul(int g, int h) const { return mult[static_cast<std::size_t>(g) * order + h]; }
    elem_t inverse(int g) const { return inv[g]; }
};

/// Validate a raw table and build a GroupTable.
///
/// Checks: square shape, entries in range, identity at index 0, Latin rows
/// and columns, two-sided inverses. Associativity is verified exhaustively
/// for order <= 256; above that it is skipped unless `paranoid` is set
/// (catalog data is trusted after one validated import).
/// Throws NotAGroupError.
GroupTable build_group(const std::vector<std::vector<int>>& table, std::string id_label,
                       bool paranoid = false);

/// A subgroup, stored as its sorted element set.
struct SubgroupHandle {
    std::vector<elem_t> elements;  // sorted, contains 0
    bool is_normal = false;

    std::size_t size() const { return elements.size(); }
    bool contains(elem_t g) const;
};

/// Smallest subgroup containing `gens`; normality is computed.
SubgroupHandle subgroup_closure(const GroupTable& G, std::span<const elem_t> gens);

/// The subgroup K generated by all squares and commutators.
/// K is normal and G/K is the largest elementary-abelian-2 quotient, so
/// G has a C2^m image iff some N with K <= N and [G:N] = 2^m exists.
SubgroupHandle agemo_commutator_subgroup(const GroupTable& G);

/// All normal subgroups N of index 2^m with G/N isomorphic to C2^m,
/// in deterministic order (lexicographic on sorted element sets).
/// Empty when no such quotient exists.
std::vector<SubgroupHandle> elementary_abelian_quotients(const GroupTable& G, int m);

/// A C2^m quotient: the normal subgroup, its cosets in a fixed canonical
/// order, and the element -> coset projection.
///
/// Coset 0 is the subgroup. Generator cosets are chosen greedily (first
/// coset outside the span so far) and cosets are then arranged so that
/// coset j carries the exponent mask coset_log[j] over those generators,
/// matching the character-matrix column order (see character_matrix).
struct QuotientMap {
    SubgroupHandle subgroup;
    int m = 0;                            // quotient is C2^m
    std::vector<elem_t> coset_of;         // element -> coset index
    std::vector<std::vector<elem_t>> cosets;  // sorted element lists
    std::vector<std::uint32_t> coset_log;     // exponent mask per coset, bit i = generator i

    int coset_count() const { return static_cast<int>(cosets.size()); }
    /// Quotient product via the exponent masks (the quotient is elementary abelian).
    int coset_mul(int a, int b) const;
};

/// Build the quotient map for a normal N with G/N isomorphic to C2^m.
/// Throws NotNormalError / NotElementaryAbelianError.
QuotientMap quotient_map(const GroupTable& G, const SubgroupHandle& N);

} // namespace pds
