#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "pds/character.hpp"
#include "pds/coset_choices.hpp"
#include "pds/group.hpp"
#include "pds/group_ring.hpp"
#include "pds/records.hpp"

namespace pds {

struct ProgressEvent {
    std::string group_id;
    int distribution_index = 0;
    int distribution_count = 0;
    std::uint64_t candidates = 0;
    std::uint64_t pruned = 0;
    std::uint64_t found = 0;
};

struct SearchConfig {
    int image_exponent = 3;  // search over a C2^m image; 8 cosets for m = 3
    std::vector<int> prune_checkpoints = {5, 6, 7};  // 1-based coset depths, paper-faithful mode
    bool strong_prune = true;   // prune at every depth, and on member counts exceeding lambda
    FilterMode filter = FilterMode::Exact;
    int parallelism = 1;
    bool emit_all = true;       // record every PDS vs stop at the first
    std::function<void(const ProgressEvent&)> on_progress;  // optional
};

/// Incremental search state: the chosen elements and their running
/// self-convolution, maintained add/remove-exactly as the bracketing
/// backtracker moves.
struct PartialState {
    const GroupTable* G = nullptr;
    std::int64_t lambda = 0, mu = 0;

    std::vector<std::int32_t> diff_counts;  // == convolve(chosen, chosen) at all times
    std::vector<std::uint8_t> member;       // indicator of chosen
    std::vector<elem_t> chosen;             // insertion order
    int depth = 0;                          // cosets consumed
    int mu_violations = 0;      // nonidentity elements with count > mu
    int lambda_violations = 0;  // chosen elements with count > lambda

    PartialState() = default;
    PartialState(const GroupTable& g, const PdsParams& p);

    void add_coset_set(std::span<const elem_t> s);
    void remove_coset_set(std::span<const elem_t> s);

private:
    void add_element(elem_t e);
    void remove_element(elem_t e);
    void bump(elem_t x);
    void unbump(elem_t x);
};

enum class PruneDecision { Keep, Prune };

/// Threshold test on a state, evaluated from diff_counts directly (the
/// engine tracks the same conditions with O(1) violation counters).
/// Prunes when any nonidentity count exceeds mu; with cfg.strong_prune,
/// also when any already-chosen element's count exceeds lambda. Sound:
/// counts only grow along a branch, and members must end at lambda,
/// nonmembers at mu <= mu.
PruneDecision prune_check(const PartialState& state, const PdsParams& p, const SearchConfig& cfg);

enum class VerifyOutcome { Accepted, RejectedCounts, RejectedIdentity };

/// Two-stage verification of a full-size candidate: the square-counts
/// profile, then the exact group-ring identity.
VerifyOutcome verify_candidate(const GroupTable& G, std::span<const elem_t> D, const PdsParams& p);

struct SearchStats {
    std::uint64_t candidates = 0;               // full-size sets reaching stage 1
    std::vector<std::uint64_t> pruned_at_depth; // index = 1-based coset depth
    double wall_seconds = 0.0;
};

struct SearchResult {
    std::string group_id;
    std::vector<PdsRecord> pds_list;     // sorted by element set
    std::vector<elem_t> chosen_subgroup; // the N actually used
    int distribution_count = 0;          // after filtering
    SearchStats stats;
};

/// Exhaustive nested search over coset choices for every filtered
/// distribution. Every returned set satisfies the group-ring identity.
/// Uses the first C2^m quotient in deterministic order; any single one is
/// exhaustive because the character constraints are necessary for every
/// NLST PDS. Throws NoElementaryAbelianImageError when the group has no
/// C2^m image. Results are canonically sorted, so serial and parallel runs
/// agree byte for byte.
SearchResult search_group(const GroupTable& G, const PdsParams& p, const SearchConfig& cfg = {});

} // namespace pds
