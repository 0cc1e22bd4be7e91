#include "tridom/construction.hpp"

#include <stdexcept>
#include <string>

namespace tridom {

ConstructionParams construction_params(int k) {
    if (k < 1) throw std::domain_error("k must be >= 1, got " + std::to_string(k));
    int i = k / 3;
    int d = (k % 3 == 2) ? k - i - 2 : k - i - 1;
    return {k, i, d};
}

std::vector<CubicCoord> construct_pds_coords(int k) {
    ConstructionParams p = construction_params(k);
    std::vector<CubicCoord> out;
    if (k == 1) {
        out.push_back({0, 0, 0});
    } else if (k <= 3) {
        out.push_back({k - 2, k - 2, k - 1});
    } else {
        for (int l = 0; l < p.i; ++l) out.push_back({1 + 3 * l, p.d + l, k + p.d - 2 - 2 * l});
        if (k % 3 != 0) out.push_back({k - 1, k - 1, k - 1});
    }

    const int expected = (k + 2) / 3;  // ceil(k/3)
    if (static_cast<int>(out.size()) != expected)
        throw std::logic_error("construction size mismatch for k=" + std::to_string(k));
    for (const CubicCoord& c : out) {
        bool in_range = c.x >= 0 && c.x <= 2 * k - 2 && c.y >= 0 && c.y <= 2 * k - 2 &&
                        c.z >= 0 && c.z <= 2 * k - 2;
        if (!in_range || c.x - c.y + c.z != k - 1)
            throw std::logic_error("constructed coordinate (" + c.str() +
                                   ") violates grid invariants for k=" + std::to_string(k));
    }
    return out;
}

VertexSet construct_pds(const TriGrid& g) {
    VertexSet s(g.size());
    for (const CubicCoord& c : construct_pds_coords(g.k())) s.insert(g.index_of(c));
    return s;
}

VertexSet triangle_set(const TriGrid& g) {
    const int k = g.k();
    VertexSet s(g.size());
    for (int v = 0; v < g.size(); ++v) {
        const CubicCoord& c = g.coord(v);
        if (c.x <= k - 1 && c.y <= k - 1 && c.z >= k - 1) s.insert(v);
    }
    return s;
}

}  // namespace tridom
