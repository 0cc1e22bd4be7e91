#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tridom/tri_grid.hpp"
#include "tridom/vertex_set.hpp"

namespace tridom {

enum class EventKind : uint8_t { Dominated, Forced };

/// One step of the monitoring process. Dominated events carry round 0 and
/// list the dominating source (-1 when the target is in S itself); Forced
/// events carry the 1-based round in which the forcing fired.
struct PropagationEvent {
    EventKind kind;
    int round;
    int target;
    int source;  // -1 = none

    friend bool operator==(const PropagationEvent&, const PropagationEvent&) = default;
};

/// Result of running the power-domination process. The trace is the
/// sequentialized order m_1, m_2, ...: dominated targets first (ascending
/// index), then forced targets grouped by round, ascending index within a
/// round. Events of one round are all computed against the round's
/// starting monitored set.
struct MonitorState {
    VertexSet monitored;
    int rounds = 0;           // completed propagation rounds (0 = nothing forced)
    int dominated_count = 0;  // |N[S]|, the length of the round-0 prefix
    std::vector<PropagationEvent> trace;

    bool covers(const TriGrid& g) const { return monitored.count() == g.size(); }
};

/// N[S]: S plus all neighbors of members of S.
VertexSet close_neighborhood(const TriGrid& g, const VertexSet& s);

/// The full process: M := N[S], then simultaneous forcing rounds until a
/// round forces nothing.
MonitorState propagate(const TriGrid& g, const VertexSet& s);

/// Same fixpoint but starting from an already-monitored set (no domination
/// step; round-0 events have no source).
MonitorState propagate_from_monitored(const TriGrid& g, const VertexSet& m0);

bool is_power_dominating(const TriGrid& g, const VertexSet& s);

/// Rounds until M = V under simultaneous-round semantics; empty when S does
/// not power-dominate (a valid query, not an error).
std::optional<int> propagation_radius(const TriGrid& g, const VertexSet& s);

/// M[t] with exactly `target_size` vertices taken from the sequentialized
/// trace. Requires |N[S]| <= target_size <= |final M|.
VertexSet monitored_prefix(const TriGrid& g, const VertexSet& s, int target_size);

/// Reusable scratch space for the traceless fixpoint engine. One instance
/// per thread; epoch stamping makes reset O(1).
class PropagationWorkspace {
public:
    void prepare(int n);

private:
    friend int monitored_count(const TriGrid&, std::span<const int>, PropagationWorkspace&);

    std::vector<uint32_t> stamp_;
    std::vector<int> unmon_count_;
    std::vector<int> touched_;
    std::vector<int> ready_;
    uint32_t epoch_ = 0;
};

/// Size of the final monitored set for candidate set s (indices need not be
/// sorted or distinct). Order-free fixpoint; no trace, no allocation after
/// the workspace has warmed up.
int monitored_count(const TriGrid& g, std::span<const int> s, PropagationWorkspace& ws);

inline bool power_dominates(const TriGrid& g, std::span<const int> s, PropagationWorkspace& ws) {
    return monitored_count(g, s, ws) == g.size();
}

}  // namespace tridom
