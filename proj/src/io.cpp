#include "tridom/io.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace tridom {

namespace {

std::string fixed4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

nlohmann::json coord_json(const CubicCoord& c) { return nlohmann::json::array({c.x, c.y, c.z}); }

// Round-number shading in the style of the propagation figures: darkest
// first round, 8 shades, then cycling.
int round_shade(int round) { return 80 - 10 * ((round - 1) % 8); }

}  // namespace

nlohmann::json grid_to_json(const TriGrid& g) {
    nlohmann::json j;
    j["k"] = g.k();
    auto verts = nlohmann::json::array();
    for (const CubicCoord& c : g.vertices()) verts.push_back(coord_json(c));
    j["vertices"] = std::move(verts);
    auto edges = nlohmann::json::array();
    for (int v = 0; v < g.size(); ++v)
        for (int u : g.neighbors(v))
            if (v < u) edges.push_back(nlohmann::json::array({v, u}));
    j["edges"] = std::move(edges);
    return j;
}

std::string grid_to_dot(const TriGrid& g) {
    std::ostringstream out;
    out << "graph T" << g.k() << " {\n";
    out << "  node [shape=circle fontsize=10];\n";
    for (int v = 0; v < g.size(); ++v) {
        auto [x, y] = layout_position(g.coord(v));
        out << "  v" << v << " [label=\"" << g.coord(v).str() << "\" pos=\"" << fixed4(x) << ","
            << fixed4(y) << "!\"];\n";
    }
    for (int v = 0; v < g.size(); ++v)
        for (int u : g.neighbors(v))
            if (v < u) out << "  v" << v << " -- v" << u << ";\n";
    out << "}\n";
    return out.str();
}

std::string grid_to_tikz(const TriGrid& g, const TikzOptions& opt) {
    std::vector<int> monitored_round(static_cast<size_t>(g.size()), -1);
    if (opt.state != nullptr)
        for (const PropagationEvent& e : opt.state->trace)
            monitored_round[static_cast<size_t>(e.target)] = e.round;

    std::ostringstream out;
    out << "\\begin{tikzpicture}[x=1cm,y=1cm,every node/.style={inner sep=1pt,font=\\tiny}]\n";
    for (int v = 0; v < g.size(); ++v) {
        auto [x, y] = layout_position(g.coord(v));
        std::string style = "draw,circle";
        if (opt.highlight != nullptr && opt.highlight->contains(v)) {
            style = "draw=red,thick,rectangle";
        } else if (monitored_round[static_cast<size_t>(v)] == 0) {
            style = "draw=blue,thick,circle";
        } else if (monitored_round[static_cast<size_t>(v)] > 0) {
            style = "draw,circle,fill=black!" +
                    std::to_string(round_shade(monitored_round[static_cast<size_t>(v)]));
        }
        out << "\\node[" << style << "] (v" << v << ") at (" << fixed4(x) << "," << fixed4(y)
            << ") {" << g.coord(v).str() << "};\n";
    }
    for (int v = 0; v < g.size(); ++v)
        for (int u : g.neighbors(v))
            if (v < u) out << "\\draw (v" << v << ") -- (v" << u << ");\n";
    out << "\\end{tikzpicture}\n";
    return out.str();
}

nlohmann::json set_to_json(const TriGrid& g, const VertexSet& s) {
    auto arr = nlohmann::json::array();
    s.for_each([&](int v) { arr.push_back(coord_json(g.coord(v))); });
    return arr;
}

VertexSet set_from_json(const TriGrid& g, const nlohmann::json& j) {
    if (!j.is_array()) throw std::domain_error("vertex set JSON must be an array of [x,y,z]");
    VertexSet s(g.size());
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 3 || !item[0].is_number_integer() ||
            !item[1].is_number_integer() || !item[2].is_number_integer())
            throw std::domain_error("vertex set entries must be [x,y,z] integer triples");
        s.insert(g.index_of({item[0].get<int>(), item[1].get<int>(), item[2].get<int>()}));
    }
    return s;
}

std::string trace_to_jsonl(const TriGrid& g, const MonitorState& st) {
    std::ostringstream out;
    for (const PropagationEvent& e : st.trace) {
        nlohmann::json j;
        j["round"] = e.round;
        j["kind"] = e.kind == EventKind::Dominated ? "dominated" : "forced";
        j["target"] = coord_json(g.coord(e.target));
        j["source"] = e.source < 0 ? nlohmann::json() : coord_json(g.coord(e.source));
        out << j.dump() << "\n";
    }
    return out.str();
}

nlohmann::json shift_trace_to_json(const TriGrid& g, const ShiftTrace& trace) {
    nlohmann::json j;
    j["passes"] = trace.passes;
    j["fixpoint_reached"] = trace.fixpoint_reached;
    auto steps = nlohmann::json::array();
    for (const ShiftStep& s : trace.steps) {
        nlohmann::json step;
        step["axis"] = s.axis;
        step["set"] = set_to_json(g, s.set);
        step["weight"] = s.weight;
        step["border_size"] = s.border_size;
        steps.push_back(std::move(step));
    }
    j["steps"] = std::move(steps);
    return j;
}

std::string set_to_tikz(const TriGrid& g, const VertexSet& members) {
    std::ostringstream out;
    out << "\\begin{tikzpicture}[x=1cm,y=1cm,every node/.style={inner sep=1pt,font=\\tiny}]\n";
    for (int v = 0; v < g.size(); ++v) {
        auto [x, y] = layout_position(g.coord(v));
        std::string style = members.contains(v) ? "draw=blue,thick,rectangle" : "draw,circle";
        out << "\\node[" << style << "] (v" << v << ") at (" << fixed4(x) << "," << fixed4(y)
            << ") {" << g.coord(v).str() << "};\n";
    }
    for (int v = 0; v < g.size(); ++v)
        for (int u : g.neighbors(v))
            if (v < u) out << "\\draw (v" << v << ") -- (v" << u << ");\n";
    out << "\\end{tikzpicture}\n";
    return out.str();
}

nlohmann::json solve_result_to_json(const TriGrid& g, const SolveResult& r, bool include_timing) {
    nlohmann::json j;
    j["k"] = r.k;
    j["gamma_p"] = r.gamma_p ? nlohmann::json(*r.gamma_p) : nlohmann::json();
    j["witness"] = set_to_json(g, r.witness);
    j["sets_tested"] = r.sets_tested;
    j["certified_lower_bound"] = r.certified_lower_bound;
    if (include_timing) j["elapsed_ms"] = r.elapsed.count();
    return j;
}

}  // namespace tridom
