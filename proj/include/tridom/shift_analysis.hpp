#pragma once

#include <vector>

#include "tridom/tri_grid.hpp"
#include "tridom/vertex_set.hpp"

namespace tridom {

/// B_A: the members of A with at least one neighbor outside A.
VertexSet border(const TriGrid& g, const VertexSet& a);

/// The j-shifted set: per line l_{v_axis = i}, keep |A ∩ line| vertices,
/// those with the smallest successor-axis coordinates. Preserves the
/// cardinality of every line slice (and hence |A|); never increases the
/// border size; strictly decreases the weight whenever it changes A.
VertexSet shift(const TriGrid& g, const VertexSet& a, int axis);

/// Global weight: sum of v1 + 2*v2 + 2*v3 over the members.
long long weight(const TriGrid& g, const VertexSet& a);

struct ShiftStep {
    VertexSet set;
    int axis;  // shift that produced this snapshot; 0 for the initial one
    long long weight;
    int border_size;
};

struct ShiftTrace {
    std::vector<ShiftStep> steps;  // initial snapshot + one per changing shift
    int passes = 0;                // full 1,2,3 passes applied (incl. the confirming one)
    bool fixpoint_reached = false;
};

struct ShiftResult {
    VertexSet fixpoint;
    ShiftTrace trace;
};

/// Applies 1-shift, 2-shift, 3-shift repeatedly until a full pass changes
/// nothing. Terminates because the global weight strictly decreases on
/// every changing shift; that decrease is asserted at runtime and the pass
/// count is capped at weight(A) + 1, so a theory violation surfaces as
/// std::logic_error instead of a hang.
ShiftResult shift_to_fixpoint(const TriGrid& g, const VertexSet& a);

/// Downward closure under the (y, z) component-wise order: for every member
/// (x, y, z), every grid vertex (x', y', z') with y' <= y and z' <= z is a
/// member too. Exactly the shape of shifting-process fixpoints.
bool is_staircase(const TriGrid& g, const VertexSet& a);

/// Replay of the sequentialized propagation of S, checking the border bound
/// |B_{M[t]}| <= 6|S| at every prefix.
struct Claim1Report {
    bool ok;
    int set_size;
    int bound;       // 6|S|
    int max_border;  // largest |B_{M[t]}| observed
    int prefixes;    // number of prefixes checked
};

Claim1Report claim1_check(const TriGrid& g, const VertexSet& s);

enum class Claim2Status { Satisfied, Violated, PreconditionUnmet };

/// Takes the ceil(|V|/2)-vertex monitored prefix M of S, shifts it to its
/// fixpoint M*, and checks 2k-1 <= |B_{M*}| <= |B_M| plus the line-coverage
/// fact (every l_{v_1=i} meets both M* and its complement).
/// Precondition |N[S]| <= ceil(|V|/2) <= |final M|; when it fails the
/// report says so instead of raising.
struct Claim2Report {
    Claim2Status status;
    int half;           // ceil(|V|/2)
    int dominated;      // |N[S]|
    int lower_bound;    // 2k-1
    int border_m;       // |B_M|
    int border_m_star;  // |B_{M*}|
    bool border_monotone;
    bool line_coverage;
};

Claim2Report claim2_check(const TriGrid& g, const VertexSet& s);

}  // namespace tridom
