#include "pds/catalog.hpp"

#include <filesystem>
#include <fstream>
#include <set>

#include <json.hpp>

#include "pds/constructors.hpp"
#include "pds/gtab.hpp"

namespace pds {

const CatalogEntry* GroupCatalog::find(const std::string& id) const {
    for (const auto& e : entries)
        if (e.id == id) return &e;
    return nullptr;
}

GroupTable GroupCatalog::load(const CatalogEntry& e, bool paranoid) const {
    if (!e.construct.empty()) return construct_from_spec(e.construct, e.id);
    GroupTable G = read_group_table_file(dir + "/" + e.file, paranoid);
    G.id_label = e.id;  // the catalog id is authoritative
    return G;
}

GroupTable GroupCatalog::load(const std::string& id, bool paranoid) const {
    const CatalogEntry* e = find(id);
    if (!e) throw Error("group id not in catalog: " + id);
    return load(*e, paranoid);
}

GroupCatalog load_catalog(const std::string& dir) {
    const std::string path = dir + "/manifest.json";
    std::ifstream in(path);
    if (!in) throw MissingManifestError("no manifest at " + path);

    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw MissingManifestError("unreadable manifest: " + std::string(e.what()));
    }

    GroupCatalog cat;
    cat.dir = dir;
    if (j.contains("metadata")) cat.metadata = j["metadata"].get<std::string>();
    if (!j.contains("groups") || !j["groups"].is_array())
        throw MissingManifestError("manifest missing \"groups\" array");

    std::set<std::string> ids;
    for (const auto& je : j["groups"]) {
        CatalogEntry e;
        e.id = je.at("id").get<std::string>();
        if (je.contains("file")) e.file = je["file"].get<std::string>();
        if (je.contains("construct")) e.construct = je["construct"].get<std::string>();
        if (je.contains("note")) e.note = je["note"].get<std::string>();
        if (e.file.empty() == e.construct.empty())
            throw MissingManifestError("entry " + e.id + " needs exactly one of file/construct");
        if (!ids.insert(e.id).second) throw MissingManifestError("duplicate id " + e.id);
        cat.entries.push_back(std::move(e));
    }
    return cat;
}

} // namespace pds
