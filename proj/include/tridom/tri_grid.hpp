#pragma once

#include <array>
#include <span>
#include <vector>

#include "tridom/cubic_coord.hpp"
#include "tridom/vertex_set.hpp"

namespace tridom {

/// The triangular grid T_k with hexagonal border: vertex set
/// {(x,y,z) in [0,2k-2]^3 : x - y + z = k - 1}, edges between vertices at
/// L1-distance 2. Immutable after construction; |V| = 3k^2 - 3k + 1.
///
/// Vertex indices follow the canonical (x, y)-lexicographic order, so all
/// traces, witnesses and exports are reproducible.
class TriGrid {
public:
    /// Builds the full grid eagerly. Throws std::domain_error for k < 1.
    explicit TriGrid(int k);

    int k() const { return k_; }
    int size() const { return static_cast<int>(verts_.size()); }
    int edge_count() const { return edge_count_; }

    const std::vector<CubicCoord>& vertices() const { return verts_; }
    const CubicCoord& coord(int v) const { return verts_[check_vertex(v)]; }

    bool contains(const CubicCoord& c) const { return lookup(c) >= 0; }

    /// Index of a coordinate triple; throws if it is not a vertex of T_k.
    int index_of(const CubicCoord& c) const;

    /// Neighbor indices of v, ascending. Throws on invalid index.
    std::span<const int> neighbors(int v) const {
        check_vertex(v);
        return {adj_flat_.data() + adj_off_[v], static_cast<size_t>(adj_off_[v + 1] - adj_off_[v])};
    }

    int degree(int v) const { return adj_off_[check_vertex(v) + 1] - adj_off_[v]; }

    /// Number of lines per axis (valid coordinate values 0..2k-2).
    int coord_range() const { return 2 * k_ - 1; }

    /// The line l_{v_axis = i} as a set. axis in {1,2,3}, 0 <= i <= 2k-2.
    VertexSet line(int axis, int i) const;

    /// Vertices of l_{v_axis = i} sorted by the successor-axis coordinate
    /// (the order the shift operation packs into).
    std::span<const int> line_vertices(int axis, int i) const;

    /// The six degree-3 hexagon corners in cyclic order around the center
    /// (for k = 1, the single vertex).
    const std::vector<int>& corners() const { return corners_; }

private:
    int check_vertex(int v) const;
    int check_axis_line(int axis, int i) const;  // returns 0-based axis
    int lookup(const CubicCoord& c) const;

    int k_ = 0;
    int edge_count_ = 0;
    std::vector<CubicCoord> verts_;
    std::vector<int> coord_to_index_;  // (2k-1)^2 table over (x, y), -1 = absent
    std::vector<int> adj_flat_;        // CSR adjacency, neighbor lists ascending
    std::vector<int> adj_off_;
    std::array<std::vector<std::vector<int>>, 3> lines_;  // [axis-1][i]
    std::vector<int> corners_;
};

}  // namespace tridom
