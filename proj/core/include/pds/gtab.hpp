#pragma once

#include <string>
#include <string_view>

#include "pds/group.hpp"

namespace pds {

/// Parse the gtab text format:
///   gtab <order> <id_label>
///   <order> lines of <order> 0-based indices (row g lists the products g*h)
/// Full group validation is applied. Throws MalformedHeaderError,
/// RowLengthMismatchError, NotAGroupError.
GroupTable parse_group_table(std::string_view text, bool paranoid = false);

/// Emit canonical gtab text; emit(parse(f)) == f for canonical files.
std::string emit_group_table(const GroupTable& G);

GroupTable read_group_table_file(const std::string& path, bool paranoid = false);
void write_group_table_file(const GroupTable& G, const std::string& path);

} // namespace pds
