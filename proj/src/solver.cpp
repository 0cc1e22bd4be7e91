#include "tridom/solver.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tridom/propagation.hpp"
#include "tridom/symmetry.hpp"

namespace tridom {

namespace {

constexpr int kMaxSubsetSize = 64;

struct SymmetryContext {
    std::vector<std::vector<int>> perms;  // identity excluded
    std::vector<char> vertex_is_orbit_min;
};

SymmetryContext make_symmetry_context(const TriGrid& g) {
    SymmetryContext ctx;
    std::vector<int> identity(static_cast<size_t>(g.size()));
    for (int v = 0; v < g.size(); ++v) identity[static_cast<size_t>(v)] = v;
    for (auto& p : hexagon_symmetries(g))
        if (p != identity) ctx.perms.push_back(std::move(p));
    ctx.vertex_is_orbit_min.assign(static_cast<size_t>(g.size()), 1);
    for (const auto& p : ctx.perms)
        for (int v = 0; v < g.size(); ++v)
            if (p[static_cast<size_t>(v)] < v) ctx.vertex_is_orbit_min[static_cast<size_t>(v)] = 0;
    return ctx;
}

// True iff `set` (ascending) is the lexicographic minimum of its orbit.
bool is_orbit_canonical(const SymmetryContext& ctx, const int* set, int s) {
    int image[kMaxSubsetSize];
    for (const auto& p : ctx.perms) {
        for (int i = 0; i < s; ++i) image[i] = p[static_cast<size_t>(set[i])];
        std::sort(image, image + s);
        if (std::lexicographical_compare(image, image + s, set, set + s)) return false;
    }
    return true;
}

struct BlockOutcome {
    bool found = false;
    long long tested = 0;
    std::vector<int> witness;
};

// Enumerates the s-subsets whose smallest element is `first`, in
// lexicographic order, testing each; stops at the block's first hit.
BlockOutcome run_block(const TriGrid& g, int first, int s, const SymmetryContext* sym,
                       PropagationWorkspace& ws) {
    const int n = g.size();
    BlockOutcome out;
    int c[kMaxSubsetSize];
    c[0] = first;

    auto test = [&](const int* set) {
        if (sym && !is_orbit_canonical(*sym, set, s)) return false;
        ++out.tested;
        return power_dominates(g, std::span<const int>(set, static_cast<size_t>(s)), ws);
    };

    if (s == 1) {
        if (test(c)) {
            out.found = true;
            out.witness.assign(c, c + 1);
        }
        return out;
    }

    // Odometer over positions 1..s-1.
    for (int i = 1; i < s; ++i) c[i] = first + i;
    if (c[s - 1] >= n) return out;
    while (true) {
        if (test(c)) {
            out.found = true;
            out.witness.assign(c, c + s);
            return out;
        }
        int pos = s - 1;
        while (pos >= 1 && c[pos] == n - s + pos) --pos;
        if (pos < 1) break;
        ++c[pos];
        for (int i = pos + 1; i < s; ++i) c[i] = c[i - 1] + 1;
    }
    return out;
}

SolveResult staged_search(const TriGrid& g, std::optional<int> size_cap, bool parallel,
                          bool use_symmetry, const VertexSet* upper_witness) {
    const auto start = std::chrono::steady_clock::now();
    const int n = g.size();

    SolveResult res;
    res.k = g.k();
    res.witness = VertexSet(n);

    if (upper_witness != nullptr && !is_power_dominating(g, *upper_witness))
        throw std::domain_error("upper-bound witness does not power-dominate");

    SymmetryContext sym_ctx;
    const SymmetryContext* sym = nullptr;
    if (use_symmetry) {
        sym_ctx = make_symmetry_context(g);
        sym = &sym_ctx;
    }

    int max_size = std::min(size_cap.value_or(n), n);
    max_size = std::min(max_size, kMaxSubsetSize);
    // Sizes >= |upper_witness| need no enumeration.
    int search_top = max_size;
    if (upper_witness != nullptr)
        search_top = std::min(search_top, upper_witness->count() - 1);

    for (int s = 1; s <= search_top; ++s) {
        const int blocks = n - s + 1;
        std::vector<BlockOutcome> outcomes(static_cast<size_t>(blocks));

        auto want_block = [&](int b) {
            return sym == nullptr || sym->vertex_is_orbit_min[static_cast<size_t>(b)];
        };

        if (parallel) {
#ifdef _OPENMP
#pragma omp parallel
            {
                PropagationWorkspace ws;
#pragma omp for schedule(dynamic)
                for (int b = 0; b < blocks; ++b)
                    if (want_block(b)) outcomes[static_cast<size_t>(b)] = run_block(g, b, s, sym, ws);
            }
#else
            PropagationWorkspace ws;
            for (int b = 0; b < blocks; ++b)
                if (want_block(b)) outcomes[static_cast<size_t>(b)] = run_block(g, b, s, sym, ws);
#endif
            for (auto& o : outcomes) res.sets_tested += o.tested;
            for (auto& o : outcomes)
                if (o.found) {
                    res.gamma_p = s;
                    for (int v : o.witness) res.witness.insert(v);
                    break;
                }
        } else {
            PropagationWorkspace ws;
            for (int b = 0; b < blocks; ++b) {
                if (!want_block(b)) continue;
                BlockOutcome o = run_block(g, b, s, sym, ws);
                res.sets_tested += o.tested;
                if (o.found) {
                    res.gamma_p = s;
                    for (int v : o.witness) res.witness.insert(v);
                    break;
                }
            }
        }

        if (res.gamma_p) break;
        res.certified_lower_bound = s + 1;
    }

    if (!res.gamma_p && upper_witness != nullptr &&
        res.certified_lower_bound == upper_witness->count()) {
        // Everything below the witness size is exhausted; the verified
        // witness settles the exact value.
        res.gamma_p = upper_witness->count();
        res.witness = *upper_witness;
    }

    res.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return res;
}

}  // namespace

SolveResult min_pds_serial(const TriGrid& g, std::optional<int> size_cap) {
    return staged_search(g, size_cap, /*parallel=*/false, /*use_symmetry=*/false, nullptr);
}

SolveResult min_pds(const TriGrid& g, std::optional<int> size_cap) {
    return staged_search(g, size_cap, /*parallel=*/true, /*use_symmetry=*/false, nullptr);
}

SolveResult min_pds_with_symmetry(const TriGrid& g, std::optional<int> size_cap,
                                  const VertexSet* upper_witness) {
    return staged_search(g, size_cap, /*parallel=*/true, /*use_symmetry=*/true, upper_witness);
}

}  // namespace tridom
