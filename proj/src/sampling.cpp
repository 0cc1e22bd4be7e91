#include "tridom/sampling.hpp"

#include <algorithm>
#include <random>
#include <vector>

#include "tridom/construction.hpp"
#include "tridom/propagation.hpp"

namespace tridom {

uint64_t mix_seed(uint64_t seed) {
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

VertexSet random_subset(const TriGrid& g, double p, uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto threshold = static_cast<uint64_t>(p * 18446744073709551616.0);  // p * 2^64
    VertexSet s(g.size());
    for (int v = 0; v < g.size(); ++v)
        if (rng() < threshold) s.insert(v);
    return s;
}

VertexSet random_subset_of_size(const TriGrid& g, int m, uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int n = g.size();
    m = std::min(m, n);
    std::vector<int> pool(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) pool[static_cast<size_t>(v)] = v;
    VertexSet s(n);
    for (int i = 0; i < m; ++i) {
        int j = i + static_cast<int>(rng() % static_cast<uint64_t>(n - i));
        std::swap(pool[static_cast<size_t>(i)], pool[static_cast<size_t>(j)]);
        s.insert(pool[static_cast<size_t>(i)]);
    }
    return s;
}

VertexSet random_staircase(const TriGrid& g, uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int range = 2 * g.k() - 1;
    std::vector<int> height(static_cast<size_t>(range));
    for (int& h : height) h = static_cast<int>(rng() % static_cast<uint64_t>(range + 1)) - 1;
    std::sort(height.begin(), height.end(), std::greater<>());
    VertexSet s(g.size());
    for (int v = 0; v < g.size(); ++v) {
        const CubicCoord& c = g.coord(v);
        if (c.y <= height[static_cast<size_t>(c.z)]) s.insert(v);
    }
    return s;
}

VertexSet random_power_dominating(const TriGrid& g, uint64_t seed) {
    const int gamma_upper = (g.k() + 2) / 3;
    for (int attempt = 0; attempt < 200; ++attempt) {
        uint64_t s = sample_seed(seed, 0xADD5, static_cast<uint64_t>(attempt));
        int m = gamma_upper + static_cast<int>(mix_seed(s) % 5);
        VertexSet cand = random_subset_of_size(g, m, s);
        if (is_power_dominating(g, cand)) return cand;
    }
    // Fallback: construction plus a few random extras.
    VertexSet s = construct_pds(g);
    VertexSet extra =
        random_subset_of_size(g, 1 + static_cast<int>(mix_seed(seed) % 4), mix_seed(seed ^ 0xFA11));
    extra.for_each([&](int v) { s.insert(v); });
    return s;
}

}  // namespace tridom
