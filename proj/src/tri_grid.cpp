#include "tridom/tri_grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tridom {

TriGrid::TriGrid(int k) : k_(k) {
    if (k < 1) throw std::domain_error("grid side length k must be >= 1, got " + std::to_string(k));

    const int range = 2 * k - 1;  // coordinate values 0..2k-2

    // Enumerate in (x, y)-lexicographic order; z is forced by x - y + z = k - 1.
    coord_to_index_.assign(static_cast<size_t>(range) * range, -1);
    for (int x = 0; x < range; ++x) {
        for (int y = 0; y < range; ++y) {
            int z = k - 1 - x + y;
            if (z < 0 || z > 2 * k - 2) continue;
            coord_to_index_[static_cast<size_t>(x) * range + y] = static_cast<int>(verts_.size());
            verts_.push_back({x, y, z});
        }
    }

    adj_off_.assign(verts_.size() + 1, 0);
    std::vector<std::vector<int>> adj(verts_.size());
    for (int v = 0; v < size(); ++v) {
        for (const CubicCoord& off : kNeighborOffsets) {
            CubicCoord c{verts_[v].x + off.x, verts_[v].y + off.y, verts_[v].z + off.z};
            int u = lookup(c);
            if (u >= 0) adj[v].push_back(u);
        }
        std::sort(adj[v].begin(), adj[v].end());
        adj_off_[v + 1] = adj_off_[v] + static_cast<int>(adj[v].size());
    }
    adj_flat_.reserve(adj_off_.back());
    for (auto& nb : adj) adj_flat_.insert(adj_flat_.end(), nb.begin(), nb.end());
    edge_count_ = adj_off_.back() / 2;

    // Lines per axis, each sorted by the successor-axis coordinate.
    for (int axis = 1; axis <= 3; ++axis) {
        auto& per_axis = lines_[axis - 1];
        per_axis.assign(range, {});
        for (int v = 0; v < size(); ++v) per_axis[verts_[v].component(axis)].push_back(v);
        int succ = successor_axis(axis);
        for (auto& line : per_axis)
            std::sort(line.begin(), line.end(), [&](int a, int b) {
                return verts_[a].component(succ) < verts_[b].component(succ);
            });
    }

    // Corners: the degree-3 vertices, ordered by angle around the center.
    if (k == 1) {
        corners_ = {0};
    } else {
        for (int v = 0; v < size(); ++v)
            if (degree(v) == 3) corners_.push_back(v);
        const double cx = (k - 1) - 0.5 * (k - 1);
        const double cy = (k - 1) * std::sqrt(3.0) / 2.0;
        std::sort(corners_.begin(), corners_.end(), [&](int a, int b) {
            auto angle = [&](int v) {
                double px = verts_[v].x - 0.5 * verts_[v].y - cx;
                double py = verts_[v].y * std::sqrt(3.0) / 2.0 - cy;
                return std::atan2(py, px);
            };
            return angle(a) < angle(b);
        });
    }
}

int TriGrid::lookup(const CubicCoord& c) const {
    const int range = 2 * k_ - 1;
    if (c.x < 0 || c.x >= range || c.y < 0 || c.y >= range) return -1;
    int v = coord_to_index_[static_cast<size_t>(c.x) * range + c.y];
    if (v >= 0 && verts_[v].z != c.z) return -1;
    return v;
}

int TriGrid::index_of(const CubicCoord& c) const {
    int v = lookup(c);
    if (v < 0)
        throw std::domain_error("(" + c.str() + ") is not a vertex of T_" + std::to_string(k_));
    return v;
}

int TriGrid::check_vertex(int v) const {
    if (v < 0 || v >= size())
        throw std::domain_error("vertex index " + std::to_string(v) + " out of range for T_" +
                                std::to_string(k_));
    return v;
}

int TriGrid::check_axis_line(int axis, int i) const {
    if (axis < 1 || axis > 3)
        throw std::domain_error("axis must be 1, 2 or 3, got " + std::to_string(axis));
    if (i < 0 || i > 2 * k_ - 2)
        throw std::domain_error("line index " + std::to_string(i) + " outside [0, " +
                                std::to_string(2 * k_ - 2) + "]");
    return axis - 1;
}

VertexSet TriGrid::line(int axis, int i) const {
    check_axis_line(axis, i);
    VertexSet s(size());
    for (int v : lines_[axis - 1][i]) s.insert(v);
    return s;
}

std::span<const int> TriGrid::line_vertices(int axis, int i) const {
    check_axis_line(axis, i);
    const auto& line = lines_[axis - 1][i];
    return {line.data(), line.size()};
}

}  // namespace tridom
