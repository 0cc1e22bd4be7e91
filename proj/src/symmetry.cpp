#include "tridom/symmetry.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace tridom {

namespace {

bool adjacent(const TriGrid& g, int u, int v) {
    auto nb = g.neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<int> common_neighbors(const TriGrid& g, int u, int v) {
    std::vector<int> out;
    for (int w : g.neighbors(u))
        if (adjacent(g, v, w)) out.push_back(w);
    return out;
}

// Grows a partial map seeded with a mapped triangle into a full vertex
// permutation. A vertex adjacent to a mapped edge has at most two possible
// images (the common neighbors of the edge's image); degree matching and
// the already-used images almost always cut that to one. Sweeps until no
// unique-candidate assignment is left.
std::optional<std::vector<int>> extend(const TriGrid& g, std::vector<int> map) {
    const int n = g.size();
    std::vector<char> used(static_cast<size_t>(n), 0);
    int assigned = 0;
    for (int v = 0; v < n; ++v)
        if (map[static_cast<size_t>(v)] >= 0) {
            used[static_cast<size_t>(map[static_cast<size_t>(v)])] = 1;
            ++assigned;
        }

    bool progress = true;
    while (assigned < n && progress) {
        progress = false;
        for (int v = 0; v < n && assigned < n; ++v) {
            if (map[static_cast<size_t>(v)] >= 0) continue;
            // Look for a mapped edge (u, w) with v adjacent to both.
            auto nb = g.neighbors(v);
            int candidate = -2;  // -2 = no mapped edge seen yet
            for (size_t a = 0; a < nb.size() && candidate != -1; ++a) {
                int u = nb[a];
                if (map[static_cast<size_t>(u)] < 0) continue;
                for (size_t b = a + 1; b < nb.size(); ++b) {
                    int w = nb[b];
                    if (map[static_cast<size_t>(w)] < 0 || !adjacent(g, u, w)) continue;
                    int cand = -1;
                    for (int c : common_neighbors(g, map[static_cast<size_t>(u)],
                                                  map[static_cast<size_t>(w)])) {
                        if (used[static_cast<size_t>(c)] || g.degree(c) != g.degree(v)) continue;
                        if (cand >= 0) {
                            cand = -1;  // ambiguous through this edge
                            break;
                        }
                        cand = c;
                    }
                    if (cand >= 0) {
                        candidate = cand;
                        break;
                    }
                    candidate = -1;  // saw a mapped edge but stayed ambiguous
                }
            }
            if (candidate >= 0) {
                map[static_cast<size_t>(v)] = candidate;
                used[static_cast<size_t>(candidate)] = 1;
                ++assigned;
                progress = true;
            }
        }
    }
    if (assigned < n) return std::nullopt;

    // Full verification: bijective and edge-preserving.
    for (int v = 0; v < n; ++v) {
        for (int u : g.neighbors(v))
            if (!adjacent(g, map[static_cast<size_t>(v)], map[static_cast<size_t>(u)]))
                return std::nullopt;
    }
    return map;
}

}  // namespace

std::vector<std::vector<int>> hexagon_symmetries(const TriGrid& g) {
    const int n = g.size();
    if (g.k() == 1) return {{0}};

    const int c0 = g.corners().front();
    std::vector<std::vector<int>> found;
    auto seen = [&](const std::vector<int>& p) {
        return std::find(found.begin(), found.end(), p) != found.end();
    };

    // Seed triangles: c0 and two adjacent neighbors forming a triangle with
    // it, mapped onto every congruent triangle anchored at a corner.
    auto nb0 = g.neighbors(c0);
    int n1 = nb0[0];
    int n2 = -1;
    for (size_t b = 1; b < nb0.size() && n2 < 0; ++b)
        if (adjacent(g, n1, nb0[b])) n2 = nb0[b];
    if (n2 < 0) throw std::logic_error("corner is not part of any triangle");

    for (int corner : g.corners()) {
        for (int m1 : g.neighbors(corner)) {
            if (g.degree(m1) != g.degree(n1)) continue;
            for (int m2 : common_neighbors(g, corner, m1)) {
                if (g.degree(m2) != g.degree(n2)) continue;
                if (m1 == m2) continue;
                std::vector<int> map(static_cast<size_t>(n), -1);
                map[static_cast<size_t>(c0)] = corner;
                map[static_cast<size_t>(n1)] = m1;
                map[static_cast<size_t>(n2)] = m2;
                if (auto p = extend(g, std::move(map)); p && !seen(*p)) found.push_back(*p);
            }
        }
    }

    if (found.size() != 12)
        throw std::logic_error("expected 12 hexagon symmetries, found " +
                               std::to_string(found.size()));
    std::sort(found.begin(), found.end());
    return found;
}

}  // namespace tridom
