#pragma once

#include <string>
#include <vector>

#include "pds/automorphisms.hpp"
#include "pds/group.hpp"

namespace pds {

/// Cyclic group of order n; element i is the i-th power of the generator.
GroupTable cyclic(int n, std::string id_label = "");

/// Direct product; element (a,b) has index a*|B| + b.
GroupTable direct_product(const GroupTable& A, const GroupTable& B, std::string id_label = "");

/// Semidirect product N x| H. `action` maps each H element to an
/// automorphism of N, with action[h1*h2] = action[h1] o action[h2] and
/// action[identity] = id; element (n,h) has index n*|H| + h and
/// (n1,h1)(n2,h2) = (n1 * action[h1](n2), h1*h2).
/// Throws InvalidActionError when action is not a homomorphism into Aut(N).
GroupTable semidirect_product(const GroupTable& N, const GroupTable& H,
                              const std::vector<Automorphism>& action,
                              std::string id_label = "");

/// Dihedral group of the given (even) order: the cyclic rotation subgroup
/// extended by an inverting reflection.
GroupTable dihedral(int order, std::string id_label = "");

/// Generalized quaternion group of the given order (a power of two >= 8):
/// <a, b | a^(n/2) = 1, b^2 = a^(n/4), b a b^-1 = a^-1>, element a^i b^j
/// at index 2i + j.
GroupTable quaternion(int order, std::string id_label = "");

/// Build a direct product of cyclic groups from a spec string such as
/// "C8xC8" or "C4xC2xC2" (case-insensitive).
GroupTable construct_from_spec(const std::string& spec, std::string id_label = "");

} // namespace pds
