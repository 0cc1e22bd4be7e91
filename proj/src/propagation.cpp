#include "tridom/propagation.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace tridom {

VertexSet close_neighborhood(const TriGrid& g, const VertexSet& s) {
    if (s.universe() != g.size()) throw std::domain_error("set does not belong to this grid");
    VertexSet m = s;
    s.for_each([&](int v) {
        for (int u : g.neighbors(v)) m.insert(u);
    });
    return m;
}

namespace {

// Shared fixpoint loop. `seed` is the initial monitored set; when `s` is
// non-null, round-0 events list the smallest dominating source.
MonitorState run_rounds(const TriGrid& g, const VertexSet& seed, const VertexSet* s) {
    const int n = g.size();
    MonitorState st{VertexSet(n), 0, 0, {}};
    st.monitored = seed;
    st.dominated_count = seed.count();
    st.trace.reserve(static_cast<size_t>(n));

    seed.for_each([&](int v) {
        int source = -1;
        if (s != nullptr && !s->contains(v)) {
            for (int u : g.neighbors(v))
                if (s->contains(u)) {
                    source = u;
                    break;  // neighbors ascending, so first hit is smallest
                }
        }
        st.trace.push_back({EventKind::Dominated, 0, v, source});
    });

    // unmon[v] = number of unmonitored neighbors; meaningful for monitored v.
    std::vector<int> unmon(static_cast<size_t>(n), 0);
    std::vector<int> candidates;  // monitored vertices with unmon == 1
    seed.for_each([&](int v) {
        int c = 0;
        for (int u : g.neighbors(v))
            if (!st.monitored.contains(u)) ++c;
        unmon[v] = c;
        if (c == 1) candidates.push_back(v);
    });

    std::vector<uint32_t> forced_in_round(static_cast<size_t>(n), 0);
    std::vector<int> next_candidates;
    std::vector<std::pair<int, int>> forcings;  // (target, source)
    while (!candidates.empty()) {
        forcings.clear();
        for (int v : candidates) {
            if (unmon[v] != 1) continue;  // stale entry
            for (int u : g.neighbors(v))
                if (!st.monitored.contains(u)) {
                    forcings.push_back({u, v});
                    break;
                }
        }
        if (forcings.empty()) break;
        // Ascending by target; the smallest source wins when several
        // vertices force the same target in one round.
        std::sort(forcings.begin(), forcings.end());
        forcings.erase(std::unique(forcings.begin(), forcings.end(),
                                   [](auto& a, auto& b) { return a.first == b.first; }),
                       forcings.end());

        ++st.rounds;
        const uint32_t round = static_cast<uint32_t>(st.rounds);
        for (auto& [target, source] : forcings) {
            st.monitored.insert(target);
            st.trace.push_back({EventKind::Forced, st.rounds, target, source});
            forced_in_round[static_cast<size_t>(target)] = round;
        }

        // Update counts against the new monitored set and collect the next
        // round's candidates.
        next_candidates.clear();
        for (auto& [target, source] : forcings) {
            int c = 0;
            for (int w : g.neighbors(target))
                if (!st.monitored.contains(w)) ++c;
            unmon[target] = c;
            if (c == 1) next_candidates.push_back(target);
        }
        for (auto& [target, source] : forcings) {
            for (int w : g.neighbors(target)) {
                if (!st.monitored.contains(w)) continue;
                if (forced_in_round[static_cast<size_t>(w)] == round) continue;  // fresh count
                if (--unmon[w] == 1) next_candidates.push_back(w);
            }
        }
        std::sort(next_candidates.begin(), next_candidates.end());
        candidates.swap(next_candidates);
    }
    return st;
}

}  // namespace

MonitorState propagate(const TriGrid& g, const VertexSet& s) {
    return run_rounds(g, close_neighborhood(g, s), &s);
}

MonitorState propagate_from_monitored(const TriGrid& g, const VertexSet& m0) {
    if (m0.universe() != g.size()) throw std::domain_error("set does not belong to this grid");
    return run_rounds(g, m0, nullptr);
}

bool is_power_dominating(const TriGrid& g, const VertexSet& s) {
    return propagate(g, s).covers(g);
}

std::optional<int> propagation_radius(const TriGrid& g, const VertexSet& s) {
    MonitorState st = propagate(g, s);
    if (!st.covers(g)) return std::nullopt;
    return st.rounds;
}

VertexSet monitored_prefix(const TriGrid& g, const VertexSet& s, int target_size) {
    MonitorState st = propagate(g, s);
    if (target_size < st.dominated_count || target_size > st.monitored.count())
        throw std::domain_error("prefix size " + std::to_string(target_size) + " outside [" +
                                std::to_string(st.dominated_count) + ", " +
                                std::to_string(st.monitored.count()) + "]");
    VertexSet m(g.size());
    for (int t = 0; t < target_size; ++t) m.insert(st.trace[static_cast<size_t>(t)].target);
    return m;
}

void PropagationWorkspace::prepare(int n) {
    if (static_cast<int>(stamp_.size()) < n) {
        stamp_.assign(static_cast<size_t>(n), 0);
        unmon_count_.assign(static_cast<size_t>(n), 0);
        epoch_ = 0;
    }
    if (epoch_ == std::numeric_limits<uint32_t>::max()) {
        std::fill(stamp_.begin(), stamp_.end(), 0);
        epoch_ = 0;
    }
    ++epoch_;
    touched_.clear();
    ready_.clear();
}

int monitored_count(const TriGrid& g, std::span<const int> s, PropagationWorkspace& ws) {
    const int n = g.size();
    ws.prepare(n);
    const uint32_t epoch = ws.epoch_;
    auto monitored = [&](int v) { return ws.stamp_[static_cast<size_t>(v)] == epoch; };

    int count = 0;
    auto mark = [&](int v) {
        if (!monitored(v)) {
            ws.stamp_[static_cast<size_t>(v)] = epoch;
            ws.touched_.push_back(v);
            ++count;
        }
    };

    for (int v : s) {
        mark(v);
        for (int u : g.neighbors(v)) mark(u);
    }

    for (int v : ws.touched_) {
        int c = 0;
        for (int u : g.neighbors(v))
            if (!monitored(u)) ++c;
        ws.unmon_count_[static_cast<size_t>(v)] = c;
        if (c == 1) ws.ready_.push_back(v);
    }

    // Order-free forcing; the final set is order-invariant.
    while (!ws.ready_.empty()) {
        int v = ws.ready_.back();
        ws.ready_.pop_back();
        if (ws.unmon_count_[static_cast<size_t>(v)] != 1) continue;
        int target = -1;
        for (int u : g.neighbors(v))
            if (!monitored(u)) {
                target = u;
                break;
            }
        ws.stamp_[static_cast<size_t>(target)] = epoch;
        ++count;
        if (count == n) return count;
        int c = 0;
        for (int w : g.neighbors(target)) {
            if (!monitored(w)) {
                ++c;
            } else if (--ws.unmon_count_[static_cast<size_t>(w)] == 1) {
                ws.ready_.push_back(w);
            }
        }
        ws.unmon_count_[static_cast<size_t>(target)] = c;
        if (c == 1) ws.ready_.push_back(target);
    }
    return count;
}

}  // namespace tridom
