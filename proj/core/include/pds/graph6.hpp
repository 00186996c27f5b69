#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pds/graph.hpp"

namespace pds {

/// Decode one graph6 line (standard nauty encoding: size header 63+n for
/// n <= 62, '~'-prefixed long form above, then the upper triangle
/// column-major in 6-bit chunks). Strict: rejects bad headers, bytes
/// outside 63..126, truncated or overlong bit streams and nonzero padding.
/// Throws MalformedGraph6Error.
Graph parse_graph6(std::string_view text);

/// Encode to canonical graph6 (no trailing newline).
std::string emit_graph6(const Graph& g);

/// Read a catalog file: one graph per line, blank lines ignored.
std::vector<Graph> read_graph6_file(const std::string& path);

} // namespace pds
