#include "pds/group_ring.hpp"

#include <algorithm>
#include <cmath>

namespace pds {

RingVector RingVector::indicator(int n, std::span<const elem_t> elems) {
    RingVector v(n);
    for (elem_t e : elems) v.coeffs[e] = 1;
    return v;
}

RingVector convolve(const GroupTable& G, const RingVector& a, const RingVector& b) {
    const std::size_t n = static_cast<std::size_t>(G.order);
    if (a.size() != n || b.size() != n)
        throw LengthMismatchError("ring vector length does not match group order");

    std::vector<int> sa, sb;
    for (std::size_t g = 0; g < n; ++g) if (a[g] != 0) sa.push_back(static_cast<int>(g));
    for (std::size_t h = 0; h < n; ++h) if (b[h] != 0) sb.push_back(static_cast<int>(h));

    RingVector r(G.order);
    for (int g : sa) {
        const std::int64_t ag = a[g];
        for (int h : sb) r[G.mul(g, h)] += ag * b[h];
    }
    return r;
}

bool inverse_closed(const GroupTable& G, std::span<const elem_t> S) {
    std::vector<char> in_set(G.order, 0);
    for (elem_t e : S) {
        if (e >= G.order) throw Error("element index out of range");
        in_set[e] = 1;
    }
    for (elem_t e : S)
        if (!in_set[G.inverse(e)]) return false;
    return true;
}

std::pair<int, int> pds_eigenvalues(std::int64_t k, std::int64_t lambda, std::int64_t mu) {
    const std::int64_t b = lambda - mu;
    const std::int64_t disc = b * b - 4 * (mu - k);
    if (disc < 0) throw NonIntegerRootsError("negative discriminant");
    std::int64_t s = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(disc))));
    while (s * s > disc) --s;
    while ((s + 1) * (s + 1) <= disc) ++s;
    if (s * s != disc) throw NonIntegerRootsError("discriminant is not a perfect square");
    if ((b + s) % 2 != 0) throw NonIntegerRootsError("roots are not integers");
    return {static_cast<int>((b + s) / 2), static_cast<int>((b - s) / 2)};
}

PdsParams PdsParams::nlst(std::int64_t v, std::int64_t k, std::int64_t lambda, std::int64_t mu) {
    auto [tp, tm] = pds_eigenvalues(k, lambda, mu);
    PdsParams p;
    p.v = v; p.k = k; p.lambda = lambda; p.mu = mu;
    p.theta_plus = tp;
    p.theta_minus = tm;
    p.r = tp;
    p.n = tp - tm;
    const std::int64_t n = p.n, r = p.r;
    if (r < 1 || n < 2 || v != n * n || k != r * (n + 1) || lambda != -n + r * r + 3 * r ||
        mu != r * r + r || lambda == mu || k >= v)
        throw BadParametersError("not negative-Latin-square-type parameters");
    return p;
}

namespace {

void validate_indicator(const GroupTable& G, const RingVector& D, const PdsParams& p) {
    if (D.size() != static_cast<std::size_t>(G.order))
        throw LengthMismatchError("indicator length does not match group order");
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < D.size(); ++i) {
        if (D[i] != 0 && D[i] != 1) throw BadCardinalityError("not a 0/1 indicator");
        sum += D[i];
    }
    if (D[0] != 0) throw BadCardinalityError("identity must not be a member");
    if (sum != p.k) throw BadCardinalityError("set size != k");
}

} // namespace

bool square_counts_check(const GroupTable& G, const RingVector& D, const PdsParams& p) {
    validate_indicator(G, D, p);
    RingVector sq = convolve(G, D, D);
    if (sq[0] != p.k) return false;
    std::int64_t at_lambda = 0, at_mu = 0;
    for (int e = 1; e < G.order; ++e) {
        if (sq[e] == p.lambda) ++at_lambda;
        else if (sq[e] == p.mu) ++at_mu;
    }
    return at_lambda == p.k && at_mu == p.v - p.k - 1;
}

bool pds_identity_check(const GroupTable& G, const RingVector& D, const PdsParams& p) {
    validate_indicator(G, D, p);
    std::vector<elem_t> elems;
    for (int e = 0; e < G.order; ++e)
        if (D[e]) elems.push_back(static_cast<elem_t>(e));
    if (!inverse_closed(G, elems)) throw NotInverseClosedError("set is not inverse-closed");

    // (D - theta+)(D - theta-) = mu*G  <=>  D^2 = k at 1, lambda on D, mu elsewhere
    RingVector sq = convolve(G, D, D);
    if (sq[0] != p.k) return false;
    for (int e = 1; e < G.order; ++e)
        if (sq[e] != (D[e] ? p.lambda : p.mu)) return false;
    return true;
}

bool square_counts_check(const GroupTable& G, std::span<const elem_t> D, const PdsParams& p) {
    return square_counts_check(G, RingVector::indicator(G.order, D), p);
}

bool pds_identity_check(const GroupTable& G, std::span<const elem_t> D, const PdsParams& p) {
    return pds_identity_check(G, RingVector::indicator(G.order, D), p);
}

bool complement_reversible_ds_check(const GroupTable& G, std::span<const elem_t> D1,
                                    std::span<const elem_t> D2) {
    std::vector<char> covered(G.order, 0);
    for (elem_t e : D1) covered[e] = 1;
    for (elem_t e : D2) {
        if (covered[e]) throw NotDisjointError("sets intersect");
        covered[e] = 1;
    }

    std::vector<elem_t> E;
    for (int e = 0; e < G.order; ++e)
        if (!covered[e]) E.push_back(static_cast<elem_t>(e));

    const std::int64_t sz = static_cast<std::int64_t>(E.size());
    if (sz * (sz - 1) % (G.order - 1) != 0)
        throw NonIntegerLambdaError("|E|(|E|-1) not divisible by v-1");
    const std::int64_t lambda_e = sz * (sz - 1) / (G.order - 1);

    if (!inverse_closed(G, E)) return false;
    RingVector ind = RingVector::indicator(G.order, E);
    RingVector sq = convolve(G, ind, ind);
    for (int e = 0; e < G.order; ++e) {
        std::int64_t expect = lambda_e + (e == 0 ? sz - lambda_e : 0);
        if (sq[e] != expect) return false;
    }
    return true;
}

} // namespace pds
