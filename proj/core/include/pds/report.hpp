#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pds/records.hpp"

namespace pds {

struct GroupReportRow {
    std::string group_id;
    std::uint64_t pds_count = 0;
    int classes = 0;        // distinct class ids assigned
    bool has_disjoint = false;
    int breakdowns = 0;     // records flagged breakdown = true
    int srg_classes = 0;    // distinct canonical hashes within the group
};

struct RunReport {
    std::vector<GroupReportRow> rows;  // sorted by group_id
    std::uint64_t total_pds = 0;
    int total_classes = 0;
    int groups_with_disjoint = 0;
    int total_breakdowns = 0;
    int distinct_srg_classes = 0;      // global distinct hashes, not a row sum
    double wall_seconds = 0.0;
};

/// Aggregate a record set into per-group rows plus totals.
RunReport build_report(const std::vector<PdsRecord>& records);

std::string report_text(const RunReport& r);
std::string report_csv(const RunReport& r);

} // namespace pds
