#pragma once

#include <vector>

#include "tridom/cubic_coord.hpp"
#include "tridom/tri_grid.hpp"
#include "tridom/vertex_set.hpp"

namespace tridom {

/// Parameters of the explicit power-dominating set for T_k.
struct ConstructionParams {
    int k;
    int i;  // floor(k/3), number of diagonal seeds
    int d;  // k-i-1 when k = 0,1 (mod 3), k-i-2 when k = 2 (mod 3)
};

ConstructionParams construction_params(int k);

/// The ceil(k/3)-vertex power-dominating set, as coordinates. O(k), no grid
/// needed; every triple satisfies the grid invariants (checked).
/// k = 1: the single vertex. k = 2,3: {(k-2, k-2, k-1)}. k >= 4: the
/// diagonal seeds (1+3l, d+l, k+d-2-2l) for 0 <= l < floor(k/3), plus the
/// center (k-1, k-1, k-1) when k is not divisible by 3.
std::vector<CubicCoord> construct_pds_coords(int k);

VertexSet construct_pds(const TriGrid& g);

/// The corner triangle {0 <= v1, v2 <= k-1, k-1 <= v3 <= 2k-2}; monitoring
/// it suffices to monitor all of T_k.
VertexSet triangle_set(const TriGrid& g);

}  // namespace tridom
