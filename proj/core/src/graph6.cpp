#include "pds/graph6.hpp"

#include <fstream>

#include "pds/errors.hpp"

namespace pds {

std::string emit_graph6(const Graph& g) {
    const int n = g.n;
    std::string s;
    if (n <= 62) {
        s.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        s.push_back('~');
        s.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        s.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        s.push_back(static_cast<char>(63 + (n & 63)));
    } else {
        throw Error("graph too large for this encoder");
    }

    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                s.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) s.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return s;
}

Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw MalformedGraph6Error("empty line");
    for (char ch : text)
        if (ch < 63 || ch > 126) throw MalformedGraph6Error("byte outside 63..126");

    std::size_t pos = 0;
    long n;
    if (text[0] == '~') {
        if (text.size() >= 2 && text[1] == '~')
            throw MalformedGraph6Error("graphs beyond 258047 vertices unsupported");
        if (text.size() < 4) throw MalformedGraph6Error("truncated size header");
        n = (static_cast<long>(text[1] - 63) << 12) | (static_cast<long>(text[2] - 63) << 6) |
            static_cast<long>(text[3] - 63);
        if (n < 63) throw MalformedGraph6Error("long-form header for a short size");
        pos = 4;
    } else {
        n = text[0] - 63;
        pos = 1;
    }
    if (n > 4096) throw MalformedGraph6Error("vertex count out of supported range");

    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t nchars = (nbits + 5) / 6;
    if (text.size() - pos != nchars)
        throw MalformedGraph6Error(text.size() - pos < nchars ? "truncated bit stream"
                                                              : "trailing bytes");

    Graph g(static_cast<int>(n));
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = text[pos + bit / 6] - 63;
            if ((byte >> (5 - bit % 6)) & 1) g.set_edge(i, j);
        }
    // padding must be zero for the encoding to be canonical
    if (nbits % 6 != 0) {
        int byte = text[pos + nchars - 1] - 63;
        int pad = static_cast<int>(6 - nbits % 6);
        if (byte & ((1 << pad) - 1)) throw MalformedGraph6Error("nonzero padding bits");
    }
    return g;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open graph6 file: " + path);
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

} // namespace pds
