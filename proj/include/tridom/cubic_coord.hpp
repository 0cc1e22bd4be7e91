#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

namespace tridom {

/// A vertex of the triangular grid T_k in cubic coordinates.
/// Valid coordinates satisfy x - y + z = k - 1 with all components in
/// [0, 2k-2]; validity is checked against a concrete grid, not here.
struct CubicCoord {
    int x = 0;
    int y = 0;
    int z = 0;

    friend bool operator==(const CubicCoord&, const CubicCoord&) = default;
    // z is determined by (x, y) on any fixed grid, so this is also the
    // canonical (x, y)-lexicographic vertex order.
    friend auto operator<=>(const CubicCoord&, const CubicCoord&) = default;

    int component(int axis) const;  // axis in 1..3
    std::string str() const;        // "x,y,z"
};

/// The six neighbor offsets of an inner vertex.
inline constexpr std::array<CubicCoord, 6> kNeighborOffsets = {{
    {0, 1, 1},
    {-1, 0, 1},
    {-1, -1, 0},
    {0, -1, -1},
    {1, 0, -1},
    {1, 1, 0},
}};

/// Cyclic successor axis: 1 -> 2 -> 3 -> 1.
constexpr int successor_axis(int axis) { return axis % 3 + 1; }

inline int CubicCoord::component(int axis) const {
    switch (axis) {
        case 1: return x;
        case 2: return y;
        default: return z;
    }
}

inline std::string CubicCoord::str() const {
    return std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z);
}

}  // namespace tridom
