#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pds/group.hpp"

namespace pds {

/// A verified PDS plus analysis annotations, as persisted to results files.
/// Analysis fields stay unset until the corresponding pass has run.
struct PdsRecord {
    std::string group_id;
    std::vector<elem_t> elements;  // sorted, identity-free
    std::vector<int> distribution; // source coset counts
    std::vector<int> eps;          // sign pattern behind the distribution

    std::optional<int> class_id;                    // equivalence class within the group
    std::optional<bool> breakdown;                  // Hadamard-difference-set breakdown found
    std::optional<std::vector<int>> disjoint_with;  // partner record indices within the group
    std::string srg_hash;                           // canonical graph6 of the Cayley graph

    bool operator==(const PdsRecord&) const = default;
};

} // namespace pds
