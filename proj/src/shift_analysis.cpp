#include "tridom/shift_analysis.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tridom/propagation.hpp"

namespace tridom {

VertexSet border(const TriGrid& g, const VertexSet& a) {
    if (a.universe() != g.size()) throw std::domain_error("set does not belong to this grid");
    VertexSet b(g.size());
    a.for_each([&](int v) {
        for (int u : g.neighbors(v))
            if (!a.contains(u)) {
                b.insert(v);
                break;
            }
    });
    return b;
}

VertexSet shift(const TriGrid& g, const VertexSet& a, int axis) {
    if (a.universe() != g.size()) throw std::domain_error("set does not belong to this grid");
    VertexSet out(g.size());
    for (int i = 0; i <= 2 * g.k() - 2; ++i) {
        auto line = g.line_vertices(axis, i);
        int cnt = 0;
        for (int v : line)
            if (a.contains(v)) ++cnt;
        for (int j = 0; j < cnt; ++j) out.insert(line[static_cast<size_t>(j)]);
    }
    return out;
}

long long weight(const TriGrid& g, const VertexSet& a) {
    if (a.universe() != g.size()) throw std::domain_error("set does not belong to this grid");
    long long w = 0;
    a.for_each([&](int v) {
        const CubicCoord& c = g.coord(v);
        w += c.x + 2LL * c.y + 2LL * c.z;
    });
    return w;
}

ShiftResult shift_to_fixpoint(const TriGrid& g, const VertexSet& a) {
    ShiftResult res{a, {}};
    long long w = weight(g, a);
    res.trace.steps.push_back({a, 0, w, border(g, a).count()});

    const long long max_passes = w + 1;
    while (true) {
        bool changed = false;
        for (int axis = 1; axis <= 3; ++axis) {
            VertexSet next = shift(g, res.fixpoint, axis);
            if (next == res.fixpoint) continue;
            long long nw = weight(g, next);
            if (nw >= w)
                throw std::logic_error("weight did not decrease under " + std::to_string(axis) +
                                       "-shift (" + std::to_string(w) + " -> " +
                                       std::to_string(nw) + ")");
            w = nw;
            changed = true;
            res.fixpoint = std::move(next);
            res.trace.steps.push_back({res.fixpoint, axis, w, border(g, res.fixpoint).count()});
        }
        ++res.trace.passes;
        if (!changed) break;
        if (res.trace.passes > max_passes)
            throw std::logic_error("shifting process exceeded the weight bound on passes");
    }
    res.trace.fixpoint_reached = true;
    return res;
}

bool is_staircase(const TriGrid& g, const VertexSet& a) {
    if (a.universe() != g.size()) throw std::domain_error("set does not belong to this grid");
    const int range = 2 * g.k() - 1;
    // top[z] = largest member y in column z, then suffix-max over z' >= z.
    // A is downward closed iff every vertex (y, z) with y <= suffix_top[z]
    // is a member.
    std::vector<int> top(static_cast<size_t>(range), -1);
    a.for_each([&](int v) {
        const CubicCoord& c = g.coord(v);
        top[static_cast<size_t>(c.z)] = std::max(top[static_cast<size_t>(c.z)], c.y);
    });
    for (int z = range - 2; z >= 0; --z)
        top[static_cast<size_t>(z)] = std::max(top[static_cast<size_t>(z)], top[static_cast<size_t>(z) + 1]);
    for (int v = 0; v < g.size(); ++v) {
        const CubicCoord& c = g.coord(v);
        if (c.y <= top[static_cast<size_t>(c.z)] && !a.contains(v)) return false;
    }
    return true;
}

Claim1Report claim1_check(const TriGrid& g, const VertexSet& s) {
    MonitorState st = propagate(g, s);
    const int bound = 6 * s.count();

    // Incremental border maintenance over the sequentialized trace:
    // v is in B_M iff v is monitored and has an unmonitored neighbor.
    const int n = g.size();
    std::vector<int> unmon(static_cast<size_t>(n), 0);
    VertexSet m(n);
    int border_size = 0;
    Claim1Report rep{true, s.count(), bound, 0, 0};

    auto add = [&](int v) {
        m.insert(v);
        int c = 0;
        for (int u : g.neighbors(v)) {
            if (m.contains(u)) {
                // u loses one unmonitored neighbor
                if (unmon[static_cast<size_t>(u)]-- == 1) --border_size;
            } else {
                ++c;
            }
        }
        unmon[static_cast<size_t>(v)] = c;
        if (c > 0) ++border_size;
    };
    auto check = [&]() {
        rep.max_border = std::max(rep.max_border, border_size);
        if (border_size > bound) rep.ok = false;
        ++rep.prefixes;
    };

    // M[0] = N[S] counts as one prefix; every later prefix adds one vertex.
    for (int t = 0; t < st.dominated_count; ++t) add(st.trace[static_cast<size_t>(t)].target);
    check();
    for (size_t t = static_cast<size_t>(st.dominated_count); t < st.trace.size(); ++t) {
        add(st.trace[t].target);
        check();
    }
    return rep;
}

Claim2Report claim2_check(const TriGrid& g, const VertexSet& s) {
    const int k = g.k();
    const int half = (g.size() + 1) / 2;  // |V| is odd
    Claim2Report rep{Claim2Status::PreconditionUnmet, half, 0, 2 * k - 1, 0, 0, false, false};

    MonitorState st = propagate(g, s);
    rep.dominated = st.dominated_count;
    if (st.dominated_count > half || st.monitored.count() < half) return rep;

    VertexSet m(g.size());
    for (int t = 0; t < half; ++t) m.insert(st.trace[static_cast<size_t>(t)].target);
    ShiftResult shifted = shift_to_fixpoint(g, m);

    rep.border_m = border(g, m).count();
    rep.border_m_star = border(g, shifted.fixpoint).count();
    rep.border_monotone = rep.border_m_star <= rep.border_m;

    rep.line_coverage = true;
    for (int i = 0; i <= 2 * k - 2; ++i) {
        bool has_member = false, has_outsider = false;
        for (int v : g.line_vertices(1, i)) {
            (shifted.fixpoint.contains(v) ? has_member : has_outsider) = true;
            if (has_member && has_outsider) break;
        }
        if (!has_member || !has_outsider) {
            rep.line_coverage = false;
            break;
        }
    }

    bool ok = rep.lower_bound <= rep.border_m_star && rep.border_monotone && rep.line_coverage;
    rep.status = ok ? Claim2Status::Satisfied : Claim2Status::Violated;
    return rep;
}

}  // namespace tridom
