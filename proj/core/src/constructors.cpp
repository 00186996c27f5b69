#include "pds/constructors.hpp"

#include <algorithm>
#include <cctype>

namespace pds {

GroupTable cyclic(int n, std::string id_label) {
    if (n < 1) throw Error("cyclic: order must be positive");
    if (id_label.empty()) id_label = "c" + std::to_string(n);
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return build_group(t, std::move(id_label));
}

GroupTable direct_product(const GroupTable& A, const GroupTable& B, std::string id_label) {
    const int na = A.order, nb = B.order, n = na * nb;
    if (id_label.empty()) id_label = A.id_label + "x" + B.id_label;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a1 = 0; a1 < na; ++a1)
        for (int b1 = 0; b1 < nb; ++b1)
            for (int a2 = 0; a2 < na; ++a2)
                for (int b2 = 0; b2 < nb; ++b2)
                    t[a1 * nb + b1][a2 * nb + b2] = A.mul(a1, a2) * nb + B.mul(b1, b2);
    return build_group(t, std::move(id_label));
}

GroupTable semidirect_product(const GroupTable& N, const GroupTable& H,
                              const std::vector<Automorphism>& action, std::string id_label) {
    const int nn = N.order, nh = H.order;
    if (static_cast<int>(action.size()) != nh)
        throw InvalidActionError("action must assign one automorphism per H element");

    for (int h = 0; h < nh; ++h) {
        const auto& perm = action[h].perm;
        if (static_cast<int>(perm.size()) != nn || perm[0] != 0)
            throw InvalidActionError("action image is not an automorphism of N");
        std::vector<char> hit(nn, 0);
        for (elem_t p : perm) {
            if (p >= nn || hit[p]) throw InvalidActionError("action image is not a bijection");
            hit[p] = 1;
        }
        for (int x = 0; x < nn; ++x)
            for (int y = 0; y < nn; ++y)
                if (perm[N.mul(x, y)] != N.mul(perm[x], perm[y]))
                    throw InvalidActionError("action image is not a homomorphism on N");
    }
    for (int x = 0; x < nn; ++x)
        if (action[0].perm[x] != x)
            throw InvalidActionError("action at the identity must be trivial");
    for (int h1 = 0; h1 < nh; ++h1)
        for (int h2 = 0; h2 < nh; ++h2)
            for (int x = 0; x < nn; ++x)
                if (action[H.mul(h1, h2)].perm[x] != action[h1].perm[action[h2].perm[x]])
                    throw InvalidActionError("action is not a homomorphism into Aut(N)");

    const int n = nn * nh;
    if (id_label.empty()) id_label = N.id_label + ":" + H.id_label;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int n1 = 0; n1 < nn; ++n1)
        for (int h1 = 0; h1 < nh; ++h1)
            for (int n2 = 0; n2 < nn; ++n2)
                for (int h2 = 0; h2 < nh; ++h2)
                    t[n1 * nh + h1][n2 * nh + h2] =
                        N.mul(n1, action[h1].perm[n2]) * nh + H.mul(h1, h2);
    return build_group(t, std::move(id_label));
}

GroupTable dihedral(int order, std::string id_label) {
    if (order < 2 || order % 2 != 0) throw Error("dihedral: order must be even and >= 2");
    const int n = order / 2;
    if (id_label.empty()) id_label = "d" + std::to_string(n);
    GroupTable cn = cyclic(n), c2 = cyclic(2);
    Automorphism id, invert;
    for (int i = 0; i < n; ++i) {
        id.perm.push_back(static_cast<elem_t>(i));
        invert.perm.push_back(static_cast<elem_t>((n - i) % n));
    }
    return semidirect_product(cn, c2, {id, invert}, std::move(id_label));
}

GroupTable quaternion(int order, std::string id_label) {
    if (order < 8 || (order & (order - 1)) != 0)
        throw Error("quaternion: order must be a power of two >= 8");
    const int m = order / 2;  // order of the cyclic part <a>
    if (id_label.empty()) id_label = "q" + std::to_string(order);
    std::vector<std::vector<int>> t(order, std::vector<int>(order));
    auto idx = [m](int i, int j) { return 2 * ((i % m + m) % m) + j; };
    for (int i1 = 0; i1 < m; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int i2 = 0; i2 < m; ++i2)
                for (int j2 = 0; j2 < 2; ++j2) {
                    // a^i1 b^j1 * a^i2 b^j2, with b a = a^-1 b and b^2 = a^(m/2)
                    int i = j1 == 0 ? i1 + i2 : i1 - i2;
                    if (j1 == 1 && j2 == 1) i += m / 2;
                    t[idx(i1, j1)][idx(i2, j2)] = idx(i, j1 ^ j2);
                }
    return build_group(t, std::move(id_label));
}

GroupTable construct_from_spec(const std::string& spec, std::string id_label) {
    std::vector<int> orders;
    std::size_t i = 0;
    while (i < spec.size()) {
        if (spec[i] == 'x' || spec[i] == 'X') { ++i; continue; }
        if (spec[i] != 'c' && spec[i] != 'C') throw Error("bad constructor spec: " + spec);
        ++i;
        std::size_t j = i;
        while (j < spec.size() && std::isdigit(static_cast<unsigned char>(spec[j]))) ++j;
        if (j == i) throw Error("bad constructor spec: " + spec);
        orders.push_back(std::stoi(spec.substr(i, j - i)));
        i = j;
    }
    if (orders.empty()) throw Error("bad constructor spec: " + spec);

    GroupTable G = cyclic(orders[0]);
    for (std::size_t f = 1; f < orders.size(); ++f) G = direct_product(G, cyclic(orders[f]));
    if (id_label.empty()) {
        id_label = spec;
        std::transform(id_label.begin(), id_label.end(), id_label.begin(),
                       [](unsigned char c) { return std::tolower(c); });
    }
    G.id_label = std::move(id_label);
    return G;
}

} // namespace pds
