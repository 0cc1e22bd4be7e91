#pragma once

#include <string>
#include <utility>

#include <json.hpp>

#include "tridom/propagation.hpp"
#include "tridom/shift_analysis.hpp"
#include "tridom/solver.hpp"
#include "tridom/tri_grid.hpp"
#include "tridom/vertex_set.hpp"

namespace tridom {

/// Axial projection used by the DOT/TikZ layouts: the six neighbor offsets
/// map to the six unit hexagonal directions.
inline std::pair<double, double> layout_position(const CubicCoord& c) {
    return {c.x - 0.5 * c.y, c.y * 0.8660254037844386};  // sqrt(3)/2
}

/// {"k": .., "vertices": [[x,y,z],..], "edges": [[i,j],..]}, canonical order.
nlohmann::json grid_to_json(const TriGrid& g);

std::string grid_to_dot(const TriGrid& g);

/// Options for the TikZ renderings. `state` shades vertices by the round
/// they were monitored in; `highlight` frames S (red squares) and N[S]
/// (blue circles) like the construction figures.
struct TikzOptions {
    const MonitorState* state = nullptr;
    const VertexSet* highlight = nullptr;
};

std::string grid_to_tikz(const TriGrid& g, const TikzOptions& opt = {});

/// A vertex set as a JSON array of [x,y,z] triples, ascending index order.
nlohmann::json set_to_json(const TriGrid& g, const VertexSet& s);

/// Parses a JSON array of [x,y,z] triples; throws std::domain_error on
/// malformed input or coordinates outside the grid.
VertexSet set_from_json(const TriGrid& g, const nlohmann::json& j);

/// One event per line:
/// {"round": r, "kind": "dominated"|"forced", "target": [x,y,z], "source": [x,y,z]|null}
std::string trace_to_jsonl(const TriGrid& g, const MonitorState& st);

/// Per step: the set, the axis that produced it, weight, border size.
nlohmann::json shift_trace_to_json(const TriGrid& g, const ShiftTrace& trace);

/// Diagram of one shift step (members as blue squares).
std::string set_to_tikz(const TriGrid& g, const VertexSet& members);

nlohmann::json solve_result_to_json(const TriGrid& g, const SolveResult& r, bool include_timing);

}  // namespace tridom
