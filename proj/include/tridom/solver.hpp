#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "tridom/tri_grid.hpp"
#include "tridom/vertex_set.hpp"

namespace tridom {

/// Outcome of the size-staged exhaustive search.
/// gamma_p is empty when the size cap was exhausted without a witness; the
/// certified lower bound still holds (every smaller size was exhausted).
/// The witness is always the lexicographically first one of its size, so
/// serial, parallel and symmetry-reduced runs agree.
struct SolveResult {
    int k = 0;
    std::optional<int> gamma_p;
    VertexSet witness;
    long long sets_tested = 0;  // candidate sets actually propagated
    std::chrono::milliseconds elapsed{0};
    int certified_lower_bound = 1;  // gamma_p >= this, proven by exhaustion
};

/// Plain reference search: sizes s = 1, 2, ...; all s-subsets in
/// lexicographic index order; stops at the first power-dominating set.
SolveResult min_pds_serial(const TriGrid& g, std::optional<int> size_cap = {});

/// Same contract, OpenMP-parallel over first-element blocks. Each block
/// runs to its own first hit, so sets_tested is schedule-independent and
/// the returned witness equals the serial one.
SolveResult min_pds(const TriGrid& g, std::optional<int> size_cap = {});

/// Search restricted to orbit representatives under the 12 hexagon
/// symmetries: a candidate is propagated only if it is the lexicographic
/// minimum of its orbit (whole blocks are skipped when the leading vertex
/// is not its own orbit's minimum). Returns the same witness as the
/// unreduced search with roughly 12x fewer sets tested.
///
/// `upper_witness`, when given, must power-dominate; once every size below
/// |upper_witness| is exhausted the search certifies gamma_p =
/// |upper_witness| without enumerating that size.
SolveResult min_pds_with_symmetry(const TriGrid& g, std::optional<int> size_cap = {},
                                  const VertexSet* upper_witness = nullptr);

}  // namespace tridom
