#include "pds/results_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pds/search.hpp"

namespace pds {

namespace {

void append_json_string(std::string& out, const std::string& s) {
    out.push_back('"');
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
}

template <typename T>
void append_int_array(std::string& out, const T& values) {
    out.push_back('[');
    bool first = true;
    for (auto v : values) {
        if (!first) out.push_back(',');
        first = false;
        out += std::to_string(static_cast<long long>(v));
    }
    out.push_back(']');
}

std::string record_line(const PdsRecord& r) {
    std::string s = "{\"group_id\":";
    append_json_string(s, r.group_id);
    s += ",\"elements\":";
    append_int_array(s, r.elements);
    s += ",\"distribution\":";
    append_int_array(s, r.distribution);
    s += ",\"eps\":";
    append_int_array(s, r.eps);
    s += ",\"class_id\":";
    s += r.class_id ? std::to_string(*r.class_id) : "null";
    s += ",\"breakdown\":";
    s += r.breakdown ? (*r.breakdown ? "true" : "false") : "null";
    s += ",\"disjoint_with\":";
    if (r.disjoint_with) append_int_array(s, *r.disjoint_with);
    else s += "null";
    s += ",\"srg_hash\":";
    if (r.srg_hash.empty()) s += "null";
    else append_json_string(s, r.srg_hash);
    s += "}";
    return s;
}

} // namespace

void save_results(std::vector<PdsRecord> records, const std::string& path) {
    std::sort(records.begin(), records.end(), [](const PdsRecord& a, const PdsRecord& b) {
        if (a.group_id != b.group_id) return a.group_id < b.group_id;
        return a.elements < b.elements;
    });
    std::ofstream out(path);
    if (!out) throw Error("cannot write results file: " + path);
    for (const auto& r : records) out << record_line(r) << '\n';
}

std::vector<PdsRecord> load_results(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open results file: " + path);

    std::vector<PdsRecord> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw CorruptRecordError("line " + std::to_string(lineno) + ": " + e.what());
        }
        PdsRecord r;
        try {
            r.group_id = j.at("group_id").get<std::string>();
            for (auto v : j.at("elements")) r.elements.push_back(v.get<elem_t>());
            for (auto v : j.at("distribution")) r.distribution.push_back(v.get<int>());
            for (auto v : j.at("eps")) r.eps.push_back(v.get<int>());
            if (j.contains("class_id") && !j["class_id"].is_null())
                r.class_id = j["class_id"].get<int>();
            if (j.contains("breakdown") && !j["breakdown"].is_null())
                r.breakdown = j["breakdown"].get<bool>();
            if (j.contains("disjoint_with") && !j["disjoint_with"].is_null()) {
                std::vector<int> dw;
                for (auto v : j["disjoint_with"]) dw.push_back(v.get<int>());
                r.disjoint_with = std::move(dw);
            }
            if (j.contains("srg_hash") && !j["srg_hash"].is_null())
                r.srg_hash = j["srg_hash"].get<std::string>();
        } catch (const nlohmann::json::exception& e) {
            throw CorruptRecordError("line " + std::to_string(lineno) + ": " + e.what());
        }
        out.push_back(std::move(r));
    }
    return out;
}

void verify_records(const std::vector<PdsRecord>& records, const GroupResolver& resolve,
                    const PdsParams& p, int sample) {
    if (records.empty()) return;
    std::vector<std::size_t> picks;
    const std::size_t n = records.size();
    if (sample < 0 || static_cast<std::size_t>(sample) >= n) {
        for (std::size_t i = 0; i < n; ++i) picks.push_back(i);
    } else if (sample > 0) {
        for (int s = 0; s < sample; ++s)
            picks.push_back(static_cast<std::size_t>(s) * n / sample);
    }
    for (std::size_t i : picks) {
        const PdsRecord& r = records[i];
        const GroupTable& G = resolve(r.group_id);
        if (verify_candidate(G, r.elements, p) != VerifyOutcome::Accepted)
            throw CorruptRecordError("record " + std::to_string(i) + " in group " + r.group_id +
                                     " fails verification");
    }
}

} // namespace pds
