#pragma once

#include <cstdint>
#include <optional>

#include "tridom/tri_grid.hpp"
#include "tridom/vertex_set.hpp"

namespace tridom {

/// splitmix64 step; used to derive independent per-sample seeds so the
/// property suites stay reproducible under any parallel schedule.
uint64_t mix_seed(uint64_t seed);

inline uint64_t sample_seed(uint64_t base, uint64_t k, uint64_t index) {
    return mix_seed(base ^ mix_seed(k ^ mix_seed(index + 1)));
}

/// Inclusion probabilities cycled by the property suites: sparse, balanced,
/// dense.
inline constexpr double kSampleDensities[3] = {0.2, 0.5, 0.8};

/// Each vertex included independently with probability p. Uses raw
/// mt19937_64 output against a fixed threshold, so results are identical
/// across platforms.
VertexSet random_subset(const TriGrid& g, double p, uint64_t seed);

/// Uniformly random m-subset (partial Fisher-Yates).
VertexSet random_subset_of_size(const TriGrid& g, int m, uint64_t seed);

/// Random staircase set: a random non-increasing column-height profile,
/// which is always downward closed under the (y, z) order.
VertexSet random_staircase(const TriGrid& g, uint64_t seed);

/// A random power-dominating set: rejection sampling of small random sets,
/// falling back to the explicit construction plus random extra vertices
/// (supersets of a power-dominating set still power-dominate).
VertexSet random_power_dominating(const TriGrid& g, uint64_t seed);

}  // namespace tridom
