// Drives the census aggregation over a reduced catalog so every code path
// (no-image skip, off-order skip, full per-group analysis) runs in CI
// without the external full-catalog data.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "support/census.hpp"
#include "support/oracles.hpp"

using namespace pds;

#ifndef PDS_SOURCE_DIR
#define PDS_SOURCE_DIR "."
#endif

TEST_CASE("census totals over the sample catalog") {
    // reduced manifest: the abelian PDS host, a no-image group, and an
    // order-16 group the order filter must skip
    auto dir = std::filesystem::temp_directory_path() / "pds_census_smoke";
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "manifest.json") << R"({"groups": [
        {"id": "g192", "construct": "C4xC4xC2xC2"},
        {"id": "c8xc8", "construct": "C8xC8"},
        {"id": "c2_4", "construct": "C2xC2xC2xC2"}
    ]})";

    GroupCatalog cat = load_catalog(dir.string());
    PdsParams p = PdsParams::nlst(64, 18, 2, 6);
    SearchConfig cfg;
    test::CensusTotals t = test::run_census(cat, p, cfg);

    CHECK(t.total_pds == 3072);
    CHECK(t.groups_with_pds == 1);
    CHECK(t.abelian_with_pds == 1);
    CHECK(t.abelian_classes == 1);
    CHECK(t.nonabelian_classes == 0);
    CHECK(t.groups_with_disjoint == 1);
    CHECK(t.complements_ok);
    CHECK(t.srg_forms.size() == 1);
    // g192 has a C2^4 image and its single class decomposes
    CHECK(t.c24_image_classes == 1);
    CHECK(t.c24_image_breakdowns == 1);
    CHECK(t.breakdown_confined);

    std::filesystem::remove_all(dir);
}
