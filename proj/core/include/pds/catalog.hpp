#pragma once

#include <string>
#include <vector>

#include "pds/group.hpp"

namespace pds {

/// One catalog entry: a gtab file or a builtin constructor spec.
struct CatalogEntry {
    std::string id;
    std::string file;       // relative to the catalog directory; empty if constructed
    std::string construct;  // e.g. "C4xC4xC2xC2"; empty if from file
    std::string note;       // free-form metadata (external id cross-references etc.)
};

struct GroupCatalog {
    std::string dir;
    std::vector<CatalogEntry> entries;
    std::string metadata;

    const CatalogEntry* find(const std::string& id) const;
    /// Load and validate one group; the entry id becomes the table's label.
    GroupTable load(const CatalogEntry& e, bool paranoid = false) const;
    GroupTable load(const std::string& id, bool paranoid = false) const;
};

/// Read <dir>/manifest.json. Throws MissingManifestError when the manifest
/// is absent or unparseable; entry ids must be unique.
GroupCatalog load_catalog(const std::string& dir);

} // namespace pds
