#include "pds/report.hpp"

#include <iomanip>
#include <map>
#include <set>
#include <sstream>

namespace pds {

RunReport build_report(const std::vector<PdsRecord>& records) {
    std::map<std::string, std::vector<const PdsRecord*>> by_group;
    for (const auto& r : records) by_group[r.group_id].push_back(&r);

    RunReport rep;
    std::set<std::string> global_hashes;
    for (const auto& [gid, recs] : by_group) {
        GroupReportRow row;
        row.group_id = gid;
        row.pds_count = recs.size();
        std::set<int> classes;
        std::set<std::string> hashes;
        for (const PdsRecord* r : recs) {
            if (r->class_id) classes.insert(*r->class_id);
            if (r->disjoint_with && !r->disjoint_with->empty()) row.has_disjoint = true;
            if (r->breakdown && *r->breakdown) ++row.breakdowns;
            if (!r->srg_hash.empty()) {
                hashes.insert(r->srg_hash);
                global_hashes.insert(r->srg_hash);
            }
        }
        row.classes = static_cast<int>(classes.size());
        row.srg_classes = static_cast<int>(hashes.size());

        rep.total_pds += row.pds_count;
        rep.total_classes += row.classes;
        rep.groups_with_disjoint += row.has_disjoint ? 1 : 0;
        rep.total_breakdowns += row.breakdowns;
        rep.rows.push_back(std::move(row));
    }
    rep.distinct_srg_classes = static_cast<int>(global_hashes.size());
    return rep;
}

std::string report_text(const RunReport& r) {
    std::ostringstream out;
    out << std::left << std::setw(16) << "group" << std::right << std::setw(10) << "pds"
        << std::setw(9) << "classes" << std::setw(10) << "disjoint" << std::setw(12)
        << "breakdowns" << std::setw(13) << "srg_classes" << '\n';
    for (const auto& row : r.rows) {
        out << std::left << std::setw(16) << row.group_id << std::right << std::setw(10)
            << row.pds_count << std::setw(9) << row.classes << std::setw(10)
            << (row.has_disjoint ? "yes" : "no") << std::setw(12) << row.breakdowns
            << std::setw(13) << row.srg_classes << '\n';
    }
    out << std::left << std::setw(16) << "TOTAL" << std::right << std::setw(10) << r.total_pds
        << std::setw(9) << r.total_classes << std::setw(10) << r.groups_with_disjoint
        << std::setw(12) << r.total_breakdowns << std::setw(13) << r.distinct_srg_classes << '\n';
    if (r.wall_seconds > 0)
        out << "wall time: " << std::fixed << std::setprecision(1) << r.wall_seconds << " s\n";
    return out.str();
}

std::string report_csv(const RunReport& r) {
    std::ostringstream out;
    out << "group_id,pds_count,classes,disjoint,breakdowns,srg_classes\n";
    for (const auto& row : r.rows)
        out << row.group_id << ',' << row.pds_count << ',' << row.classes << ','
            << (row.has_disjoint ? 1 : 0) << ',' << row.breakdowns << ',' << row.srg_classes
            << '\n';
    out << "TOTAL," << r.total_pds << ',' << r.total_classes << ',' << r.groups_with_disjoint
        << ',' << r.total_breakdowns << ',' << r.distinct_srg_classes << '\n';
    return out.str();
}

} // namespace pds
