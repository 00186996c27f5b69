#pragma once

#include <cstdint>
#include <vector>

#include "pds/group.hpp"
#include "pds/group_ring.hpp"

namespace pds {

/// The +-1 character table of C2^m. Rows are characters, columns are group
/// elements; h[i][j] = (-1)^popcount(row_mask[i] & col_mask[j]).
///
/// Orderings are fixed: for m = 3 both follow the classical listing
/// {1, x, y, z, xy, yz, xz, xyz} of elements (columns) with the matching
/// character row order, so the m = 3 matrix is reproduced entry for entry;
/// for other m both run in plain binary-counter order.
struct CharacterMatrix {
    int m = 0;
    std::vector<std::uint32_t> row_masks;  // character labels
    std::vector<std::uint32_t> col_masks;  // element labels
    std::vector<std::int8_t> h;            // 2^m x 2^m, row-major, entries +-1

    int dim() const { return 1 << m; }
    int at(int i, int j) const { return h[static_cast<std::size_t>(i) * dim() + j]; }
};

/// Canonical column (element) label order used by CharacterMatrix and
/// QuotientMap for a C2^m quotient.
std::vector<std::uint32_t> canonical_element_order(int m);

/// Build the character matrix for C2^m (m <= 6).
CharacterMatrix character_matrix(int m);

/// One feasible coset-count vector: counts[j] = number of PDS elements in
/// coset j, together with the eigenvalue sign pattern (eps_2..eps_{2^m})
/// that produced it via v = H^{-1} [k, eps...].
struct Distribution {
    std::vector<int> counts;
    std::vector<int> eps;

    bool operator==(const Distribution&) const = default;
};

/// Enumerate all 2^(2^m - 1) sign patterns over {theta_plus, theta_minus},
/// compute v = (1/2^m) H^T u with exact integer arithmetic, and keep the
/// vectors whose entries are all nonnegative integers. Patterns run in
/// binary-counter order over (eps_2, ..., eps_{2^m}) with bit value 0
/// meaning theta_plus.
std::vector<Distribution> enumerate_distributions(const CharacterMatrix& H, const PdsParams& p);

/// Per-coset supply of order-2 elements and inverse pairs.
struct CosetProfile {
    int involutions = 0;  // order-2 elements; identity excluded in coset 0
    int pairs = 0;        // inverse pairs {g, g^-1} with g != g^-1
    int capacity() const { return involutions + 2 * pairs; }
};

struct FeasibilityProfile {
    std::vector<CosetProfile> cosets;
};

/// Count involutions and inverse pairs per coset of a C2^m quotient.
FeasibilityProfile involution_profile(const GroupTable& G, const QuotientMap& Q);

enum class FilterMode {
    Exact,          // per-coset subset-existence test (capacity + achievable parity)
    PaperFaithful,  // only drop counts that are odd in a coset without involutions
};

/// Drop distributions that no inverse-closed selection can realize.
///
/// Exact mode keeps v iff every coset j admits an inverse-closed subset of
/// size v_j (some s <= involutions with v_j - s even and (v_j-s)/2 <= pairs,
/// and v_j within capacity). PaperFaithful keeps strictly more: it only
/// removes v when some odd v_j lands in a coset with no involution at all.
std::vector<Distribution> filter_distributions(const std::vector<Distribution>& ds,
                                               const FeasibilityProfile& prof,
                                               FilterMode mode = FilterMode::Exact);

} // namespace pds
