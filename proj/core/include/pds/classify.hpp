#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "pds/automorphisms.hpp"
#include "pds/group.hpp"
#include "pds/group_ring.hpp"
#include "pds/records.hpp"

namespace pds {

struct EquivalenceClass {
    int class_id = 0;
    std::vector<int> members;  // indices into the input list, ascending
    int representative = 0;    // member with the lexicographically least element set
};

/// Partition verified PDSs into automorphism orbits with the found-flag
/// sweep: each unfound list entry seeds a class, then every automorphic
/// image present in the list is marked with the same id. Equivalence uses
/// automorphisms only, no translates. Throws PdsNotVerifiedError if an
/// entry fails the group-ring identity.
std::vector<EquivalenceClass> equivalence_classes(const GroupTable& G,
                                                  const std::vector<PdsRecord>& pds_list,
                                                  const PdsParams& p);

/// All unordered pairs of list entries with empty intersection; with
/// first_only, stops after the first hit.
std::vector<std::pair<int, int>> disjoint_pairs(const std::vector<PdsRecord>& pds_list,
                                                bool first_only = false);

/// A decomposition of a PDS into three Hadamard difference sets across the
/// nonidentity cosets of an index-4 normal subgroup R with G/R = C2^2.
struct Breakdown {
    SubgroupHandle subgroup;                      // R
    std::array<std::vector<elem_t>, 3> parts;     // D intersected with cosets z, w, zw
    std::array<std::uint32_t, 3> coset_labels{};  // exponent masks of those cosets
};

/// Search all C2^2 quotients of G for a breakdown of D: image counts
/// (0, |D|/3, |D|/3, |D|/3), and each part's difference multiset covering
/// every nonidentity element of R exactly twice. Returns the first
/// breakdown found, or nullopt. D must be a verified PDS of size divisible
/// by 3 (size 18 in the target parameters).
std::optional<Breakdown> hadamard_breakdown(const GroupTable& G, std::span<const elem_t> D);

} // namespace pds
