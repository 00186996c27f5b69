#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "pds/group.hpp"

namespace pds {

/// An integer-coefficient vector over a group: a group-ring element.
struct RingVector {
    std::vector<std::int64_t> coeffs;

    RingVector() = default;
    explicit RingVector(int n) : coeffs(n, 0) {}

    static RingVector indicator(int n, std::span<const elem_t> elems);

    std::int64_t& operator[](std::size_t i) { return coeffs[i]; }
    std::int64_t operator[](std::size_t i) const { return coeffs[i]; }
    std::size_t size() const { return coeffs.size(); }

    bool operator==(const RingVector&) const = default;
};

/// Group-ring product: result[e] = sum over (g,h) with g*h = e of a[g]*b[h].
/// Iterates supports only, so 0/1 indicators multiply in O(|a|*|b|) table
/// lookups. Throws LengthMismatchError.
RingVector convolve(const GroupTable& G, const RingVector& a, const RingVector& b);

/// True iff S = S^(-1).
bool inverse_closed(const GroupTable& G, std::span<const elem_t> S);

/// Solve the PDS character quadratic x^2 = (k-mu) + (lambda-mu) x for its
/// two integer roots (theta_plus, theta_minus). Throws NonIntegerRootsError
/// when the discriminant is not a perfect square or the roots are not
/// integral.
std::pair<int, int> pds_eigenvalues(std::int64_t k, std::int64_t lambda, std::int64_t mu);

/// Validated negative-Latin-square-type parameters
/// (v,k,lambda,mu) = (n^2, r(n+1), -n+r^2+3r, r^2+r).
struct PdsParams {
    std::int64_t v = 0, k = 0, lambda = 0, mu = 0;
    int n = 0, r = 0;
    int theta_plus = 0, theta_minus = 0;  // r and r-n

    /// Build from (v,k,lambda,mu); derives n, r and the eigenvalues and
    /// checks the NLST identities. Throws NonIntegerRootsError or
    /// BadParametersError.
    static PdsParams nlst(std::int64_t v, std::int64_t k, std::int64_t lambda, std::int64_t mu);
};

/// Stage-1 check: D*D has coefficient k at the identity, lambda on exactly
/// k elements and mu on exactly v-k-1 elements. Necessary but not
/// sufficient: it does not place the lambda-coefficient elements inside D.
/// D must be 0/1 with D[identity]=0 and sum k (BadCardinalityError).
bool square_counts_check(const GroupTable& G, const RingVector& D, const PdsParams& p);

/// Stage-2 check, the definitive test: the group-ring identity
/// (D - theta_plus)(D - theta_minus) = mu*G holds exactly, equivalently
/// D^2 = k + lambda*D + mu*(G - D - 1) with D identity-free.
/// Throws BadCardinalityError / NotInverseClosedError on malformed input.
bool pds_identity_check(const GroupTable& G, const RingVector& D, const PdsParams& p);

/// Convenience overloads taking element sets.
bool square_counts_check(const GroupTable& G, std::span<const elem_t> D, const PdsParams& p);
bool pds_identity_check(const GroupTable& G, std::span<const elem_t> D, const PdsParams& p);

/// For disjoint D1, D2, let E = G \ (D1 u D2) (E keeps the identity).
/// Returns true iff E = E^(-1) and E*E = (|E|-lambda_E) + lambda_E*G with
/// lambda_E = |E|(|E|-1)/(v-1), i.e. E is a reversible difference set.
/// Throws NotDisjointError / NonIntegerLambdaError.
bool complement_reversible_ds_check(const GroupTable& G, std::span<const elem_t> D1,
                                    std::span<const elem_t> D2);

} // namespace pds
