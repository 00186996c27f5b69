#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pds/group_ring.hpp"
#include "pds/records.hpp"

namespace pds {

/// Persist records as JSON-lines, one record per line with a fixed field
/// order, sorted by (group_id, elements). Byte-identical for identical
/// record sets.
void save_results(std::vector<PdsRecord> records, const std::string& path);

/// Parse a results file (no verification).
std::vector<PdsRecord> load_results(const std::string& path);

using GroupResolver = std::function<const GroupTable&(const std::string& group_id)>;

/// Re-run both verification stages on `sample` evenly spread records
/// (sample < 0 means all). Throws CorruptRecordError on the first failure.
void verify_records(const std::vector<PdsRecord>& records, const GroupResolver& resolve,
                    const PdsParams& p, int sample = -1);

} // namespace pds
