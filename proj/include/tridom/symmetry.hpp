#pragma once

#include <vector>

#include "tridom/tri_grid.hpp"

namespace tridom {

/// The hexagon's symmetries of T_k as vertex permutations (perm[v] = image
/// of v): exactly 12 for k >= 2 (6 rotations, 6 reflections), the identity
/// alone for k = 1. Found by automorphism search seeded at corner images
/// and extended by unique-candidate constraint propagation; every returned
/// permutation is verified to preserve the edge set.
std::vector<std::vector<int>> hexagon_symmetries(const TriGrid& g);

}  // namespace tridom
