// Regenerates the gtab files shipped in data/catalog (the construct-backed
// entries live only in the manifest). Usage: pdsearch-gen-catalog <dir>

#include <cstdio>

#include "pds/constructors.hpp"
#include "pds/gtab.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: %s <output-dir>\n", argv[0]);
        return 2;
    }
    const std::string dir = argv[1];
    using namespace pds;

    // modular group of order 16: C8 x| C2, generator acting as a -> a^5
    GroupTable c8 = cyclic(8), c2 = cyclic(2);
    Automorphism id, pow5;
    for (int i = 0; i < 8; ++i) {
        id.perm.push_back(static_cast<elem_t>(i));
        pow5.perm.push_back(static_cast<elem_t>(5 * i % 8));
    }
    write_group_table_file(semidirect_product(c8, c2, {id, pow5}, "m4_2"), dir + "/m4_2.gtab");

    write_group_table_file(direct_product(dihedral(8, "d4"), cyclic(2), "d4xc2"),
                           dir + "/d4xc2.gtab");
    write_group_table_file(direct_product(quaternion(8), cyclic(2), "q8xc2"),
                           dir + "/q8xc2.gtab");
    write_group_table_file(direct_product(dihedral(32, "d16"), cyclic(2), "d16xc2"),
                           dir + "/d16xc2.gtab");
    std::printf("wrote 4 gtab files to %s\n", dir.c_str());
    return 0;
}
