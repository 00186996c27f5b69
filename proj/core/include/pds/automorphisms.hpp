#pragma once

#include <vector>

#include "pds/group.hpp"

namespace pds {

/// A group automorphism as a permutation of element indices:
/// perm[0] = 0 and perm[g*h] = perm[g]*perm[h].
struct Automorphism {
    std::vector<elem_t> perm;

    elem_t operator()(elem_t g) const { return perm[g]; }
    bool operator==(const Automorphism&) const = default;
};

/// The full automorphism group, materialized as permutations.
///
/// Backtracks over images of a greedily chosen generating set (descending
/// element order), pruning candidates by order, square-root count and
/// conjugacy class size, and validating the homomorphism by incremental
/// closure. Deterministic output order. Fails loudly
/// (AutGroupTooLargeError) beyond 2^20 automorphisms rather than sampling.
std::vector<Automorphism> automorphism_group(const GroupTable& G);

} // namespace pds
