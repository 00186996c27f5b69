#pragma once

#include <vector>

#include "pds/group.hpp"

namespace pds {

/// Precomputed per-coset choice database: for every coset c and target size
/// s, the complete list of inverse-closed s-subsets of coset c (identity
/// excluded in coset 0), each sorted, lists in lexicographic order.
struct CosetChoiceDB {
    // table[c][s] = all inverse-closed subsets of coset c with |subset| = s
    std::vector<std::vector<std::vector<std::vector<elem_t>>>> table;

    /// Stored list for (coset, size); empty when no such subset exists
    /// (size out of range included).
    const std::vector<std::vector<elem_t>>& choices(int coset, int size) const;
};

/// Materialize the database for all cosets of a C2^m quotient. Subsets are
/// generated as (size - 2j) involutions plus j inverse pairs for every
/// feasible j.
CosetChoiceDB build_choices(const GroupTable& G, const QuotientMap& Q);

} // namespace pds
