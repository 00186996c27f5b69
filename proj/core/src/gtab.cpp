#include "pds/gtab.hpp"

#include <fstream>
#include <sstream>

namespace pds {

GroupTable parse_group_table(std::string_view text, bool paranoid) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line)) throw MalformedHeaderError("missing header line");

    std::istringstream hdr(line);
    std::string tag, label;
    long order = 0;
    if (!(hdr >> tag >> order >> label) || tag != "gtab" || order < 1)
        throw MalformedHeaderError("expected: gtab <order> <id_label>");
    std::string extra;
    if (hdr >> extra) throw MalformedHeaderError("trailing tokens in header");

    std::vector<std::vector<int>> rows;
    rows.reserve(order);
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<int> row;
        int x;
        while (ls >> x) row.push_back(x);
        if (row.empty()) {
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw RowLengthMismatchError("non-numeric row");
            continue;
        }
        if (static_cast<long>(rows.size()) == order)
            throw RowLengthMismatchError("more rows than the declared order");
        if (static_cast<long>(row.size()) != order)
            throw RowLengthMismatchError("row " + std::to_string(rows.size()) + " has " +
                                         std::to_string(row.size()) + " entries, expected " +
                                         std::to_string(order));
        rows.push_back(std::move(row));
    }
    if (static_cast<long>(rows.size()) != order)
        throw RowLengthMismatchError("expected " + std::to_string(order) + " rows, got " +
                                     std::to_string(rows.size()));
    return build_group(rows, label, paranoid);
}

std::string emit_group_table(const GroupTable& G) {
    std::ostringstream out;
    out << "gtab " << G.order << ' ' << G.id_label << '\n';
    for (int g = 0; g < G.order; ++g) {
        for (int h = 0; h < G.order; ++h) {
            if (h) out << ' ';
            out << static_cast<int>(G.mul(g, h));
        }
        out << '\n';
    }
    return out.str();
}

GroupTable read_group_table_file(const std::string& path, bool paranoid) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open group table file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_group_table(buf.str(), paranoid);
}

void write_group_table_file(const GroupTable& G, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write group table file: " + path);
    out << emit_group_table(G);
}

} // namespace pds
