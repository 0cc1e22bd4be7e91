// Command-line front end: grid generation and export, the explicit
// power-dominating construction, propagation traces, exact solving, the
// shifting process demo, and the lemma/claim experiment suites.
//
// Exit codes: 0 success, 2 usage error, 3 verification failure,
// 4 property violation.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "tridom/construction.hpp"
#include "tridom/io.hpp"
#include "tridom/propagation.hpp"
#include "tridom/sampling.hpp"
#include "tridom/shift_analysis.hpp"
#include "tridom/solver.hpp"
#include "tridom/tri_grid.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace tridom;

constexpr int kExitUsage = 2;
constexpr int kExitVerification = 3;
constexpr int kExitViolation = 4;

struct KRange {
    int lo = 1;
    int hi = 1;
};

KRange parse_k_range(const std::string& text) {
    KRange r;
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoi(text);
        } else {
            r.lo = std::stoi(text.substr(0, dots));
            r.hi = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw std::domain_error("cannot parse k or k-range from '" + text + "'");
    }
    if (r.lo < 1 || r.hi < r.lo)
        throw std::domain_error("k-range '" + text + "' must satisfy 1 <= A <= B");
    return r;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + out_path);
    out << text;
}

VertexSet load_set(const TriGrid& g, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot open set file " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::domain_error("set file " + path + " is not valid JSON: " + e.what());
    }
    return set_from_json(g, j);
}

// ---- gen ----------------------------------------------------------------

int cmd_gen(int k, const std::string& format, const std::string& out) {
    TriGrid g(k);
    if (format == "json")
        emit(grid_to_json(g).dump() + "\n", out);
    else if (format == "dot")
        emit(grid_to_dot(g), out);
    else
        emit(grid_to_tikz(g), out);
    return 0;
}

// ---- construct ----------------------------------------------------------

int cmd_construct(int k, bool verify, const std::string& out) {
    TriGrid g(k);
    VertexSet s = construct_pds(g);
    emit(set_to_json(g, s).dump() + "\n", out);
    if (verify) {
        auto radius = propagation_radius(g, s);
        if (!radius) {
            std::cerr << "verification FAILED: the construction does not power-dominate T_" << k
                      << "\n";
            return kExitVerification;
        }
        std::cerr << "verified: " << s.count() << " vertices power-dominate T_" << k << " in "
                  << *radius << " rounds\n";
    }
    return 0;
}

// ---- propagate / radius -------------------------------------------------

VertexSet pick_seed_set(const TriGrid& g, const std::string& set_file, bool triangle) {
    if (triangle) return triangle_set(g);
    if (!set_file.empty()) return load_set(g, set_file);
    return construct_pds(g);
}

int cmd_propagate(int k, const std::string& set_file, bool triangle, bool monitored,
                  const std::string& format, const std::string& out) {
    TriGrid g(k);
    VertexSet s = pick_seed_set(g, set_file, triangle);
    const bool from_monitored = monitored || triangle;
    MonitorState st = from_monitored ? propagate_from_monitored(g, s) : propagate(g, s);

    if (format == "jsonl") {
        emit(trace_to_jsonl(g, st), out);
    } else {
        TikzOptions opt;
        opt.state = &st;
        if (!from_monitored) opt.highlight = &s;
        emit(grid_to_tikz(g, opt), out);
    }
    std::cerr << "monitored " << st.monitored.count() << "/" << g.size() << " vertices in "
              << st.rounds << " rounds\n";
    return 0;
}

int cmd_radius(int k, const std::string& set_file, bool triangle, bool monitored,
               const std::string& out) {
    TriGrid g(k);
    VertexSet s = pick_seed_set(g, set_file, triangle);
    MonitorState st =
        (monitored || triangle) ? propagate_from_monitored(g, s) : propagate(g, s);
    nlohmann::json j;
    j["k"] = k;
    j["dominating"] = st.covers(g);
    j["monitored"] = st.monitored.count();
    j["radius"] = st.covers(g) ? nlohmann::json(st.rounds) : nlohmann::json();
    emit(j.dump() + "\n", out);
    return 0;
}

// ---- solve ----------------------------------------------------------------

int cmd_solve(const KRange& range, std::optional<int> size_cap, bool symmetry, bool serial,
              bool timing, const std::string& out) {
    std::ostringstream table;
    table << "k\tgamma_p\tceil(k/3)\tmatch\tlower_bound\tsets_tested";
    if (timing) table << "\telapsed_ms";
    table << "\n";

    auto results = nlohmann::json::array();
    bool mismatch = false;
    for (int k = range.lo; k <= range.hi; ++k) {
        TriGrid g(k);
        SolveResult r;
        if (symmetry) {
            VertexSet witness = construct_pds(g);
            r = min_pds_with_symmetry(g, size_cap, &witness);
        } else if (serial) {
            r = min_pds_serial(g, size_cap);
        } else {
            r = min_pds(g, size_cap);
        }
        results.push_back(solve_result_to_json(g, r, timing));

        const int expected = (k + 2) / 3;
        table << k << "\t";
        if (r.gamma_p) {
            bool match = *r.gamma_p == expected;
            mismatch = mismatch || !match;
            table << *r.gamma_p << "\t" << expected << "\t" << (match ? "yes" : "NO") << "\t";
        } else {
            table << "-\t" << expected << "\tunresolved\t";
        }
        table << r.certified_lower_bound << "\t" << r.sets_tested;
        if (timing) table << "\t" << r.elapsed.count();
        table << "\n";
    }

    std::cout << table.str();
    if (!out.empty()) emit(results.dump(2) + "\n", out);
    return mismatch ? kExitVerification : 0;
}

// ---- shift-demo -----------------------------------------------------------

int cmd_shift_demo(int k, uint64_t seed, const std::string& set_file, int max_steps,
                   const std::string& format, const std::string& out) {
    TriGrid g(k);
    VertexSet a = set_file.empty() ? random_subset(g, 0.5, seed) : load_set(g, set_file);
    ShiftResult res = shift_to_fixpoint(g, a);

    size_t shown = res.trace.steps.size();
    if (max_steps > 0) shown = std::min(shown, static_cast<size_t>(max_steps));

    if (format == "json") {
        ShiftTrace clipped{{res.trace.steps.begin(), res.trace.steps.begin() + shown},
                           res.trace.passes,
                           res.trace.fixpoint_reached};
        emit(shift_trace_to_json(g, clipped).dump(2) + "\n", out);
    } else if (format == "tikz") {
        std::ostringstream o;
        for (size_t i = 0; i < shown; ++i) {
            const ShiftStep& s = res.trace.steps[i];
            o << "% step " << i << (s.axis == 0 ? " (initial)" : " (" + std::to_string(s.axis) + "-shift)")
              << " weight=" << s.weight << " border=" << s.border_size << "\n";
            o << set_to_tikz(g, s.set);
        }
        emit(o.str(), out);
    } else {
        std::ostringstream o;
        o << "step\taxis\tsize\tweight\tborder\n";
        for (size_t i = 0; i < shown; ++i) {
            const ShiftStep& s = res.trace.steps[i];
            o << i << "\t" << (s.axis == 0 ? std::string("-") : std::to_string(s.axis)) << "\t"
              << s.set.count() << "\t" << s.weight << "\t" << s.border_size << "\n";
        }
        o << "fixpoint after " << res.trace.passes << " passes, staircase="
          << (is_staircase(g, res.fixpoint) ? "yes" : "no") << "\n";
        emit(o.str(), out);
    }
    return 0;
}

// ---- experiments ----------------------------------------------------------

struct SuiteRow {
    std::string name;
    long long checks = 0;
    long long violations = 0;
    long long skipped = 0;
    std::string note;
};

SuiteRow lemma3_suite(const KRange& range, uint64_t seed, int samples) {
    SuiteRow row{"lemma3-border-monotonicity"};
    for (int k = std::max(range.lo, 2); k <= range.hi; ++k) {
        TriGrid g(k);
        long long violations = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : violations)
#endif
        for (int i = 0; i < samples; ++i) {
            VertexSet a = random_subset(g, kSampleDensities[i % 3], sample_seed(seed, k, i));
            int ba = border(g, a).count();
            for (int axis = 1; axis <= 3; ++axis)
                if (border(g, shift(g, a, axis)).count() > ba) ++violations;
        }
        row.checks += 3LL * samples;
        row.violations += violations;
    }
    return row;
}

SuiteRow lemma4_suite(const KRange& range, uint64_t seed, int samples) {
    SuiteRow row{"lemma4-shift-fixpoint"};
    for (int k = std::max(range.lo, 2); k <= range.hi; ++k) {
        TriGrid g(k);
        long long violations = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : violations)
#endif
        for (int i = 0; i < samples; ++i) {
            VertexSet a = random_subset(g, kSampleDensities[i % 3], sample_seed(seed + 1, k, i));
            try {
                ShiftResult res = shift_to_fixpoint(g, a);
                bool ok = res.trace.fixpoint_reached &&
                          res.trace.passes <= weight(g, a) + 1 && is_staircase(g, res.fixpoint);
                // Staircase sets are themselves fixpoints.
                VertexSet st = random_staircase(g, sample_seed(seed + 2, k, i));
                for (int axis = 1; axis <= 3 && ok; ++axis)
                    ok = ok && shift(g, st, axis) == st;
                if (!ok) ++violations;
            } catch (const std::logic_error&) {
                ++violations;  // weight failed to decrease or pass cap hit
            }
        }
        row.checks += samples;
        row.violations += violations;
    }
    return row;
}

SuiteRow claim1_suite(const KRange& range, uint64_t seed, int pds_samples) {
    SuiteRow row{"claim1-prefix-borders"};
    for (int k = range.lo; k <= range.hi; ++k) {
        TriGrid g(k);
        Claim1Report rep = claim1_check(g, construct_pds(g));
        ++row.checks;
        if (!rep.ok) ++row.violations;
        if (k >= 4 && k <= 6) {
            long long violations = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : violations)
#endif
            for (int i = 0; i < pds_samples; ++i) {
                VertexSet s = random_power_dominating(g, sample_seed(seed + 3, k, i));
                if (!claim1_check(g, s).ok) ++violations;
            }
            row.checks += pds_samples;
            row.violations += violations;
        }
    }
    return row;
}

SuiteRow claim2_suite(const KRange& range) {
    SuiteRow row{"claim2-shifted-half-border"};
    int max_border_gap = 0;
    for (int k = std::max(range.lo, 4); k <= range.hi; ++k) {
        TriGrid g(k);
        Claim2Report rep = claim2_check(g, construct_pds(g));
        if (rep.status == Claim2Status::PreconditionUnmet) {
            ++row.skipped;
            continue;
        }
        ++row.checks;
        if (rep.status == Claim2Status::Violated) ++row.violations;
        max_border_gap = std::max(max_border_gap, rep.border_m_star - rep.lower_bound);
    }
    row.note = "max |B_M*| slack over 2k-1: " + std::to_string(max_border_gap);
    return row;
}

int cmd_experiments(const KRange& range, uint64_t seed, int samples, int pds_samples) {
    SuiteRow rows[] = {
        lemma3_suite(range, seed, samples),
        lemma4_suite(range, seed, samples),
        claim1_suite(range, seed, pds_samples),
        claim2_suite(range),
    };
    std::cout << "suite\tchecks\tviolations\tskipped\tresult\n";
    bool violated = false;
    for (const SuiteRow& r : rows) {
        std::cout << r.name << "\t" << r.checks << "\t" << r.violations << "\t" << r.skipped
                  << "\t" << (r.violations == 0 ? "pass" : "FAIL");
        if (!r.note.empty()) std::cout << "\t# " << r.note;
        std::cout << "\n";
        violated = violated || r.violations != 0;
    }
    return violated ? kExitViolation : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"triangular-grid power domination toolkit"};
    app.require_subcommand(1);

    std::string k_text = "1", format, set_file, out_path;
    bool verify = false, triangle = false, monitored = false, symmetry = false, serial = false,
         timing = false;
    std::optional<int> size_cap;
    uint64_t seed = 0;
    int max_steps = 0, samples = 10000, pds_samples = 100;

    auto* gen = app.add_subcommand("gen", "emit the grid T_k");
    gen->add_option("--k", k_text, "side length k")->required();
    gen->add_option("--format", format, "json|dot|tikz")
        ->default_val("json")
        ->check(CLI::IsMember({"json", "dot", "tikz"}));
    gen->add_option("--out", out_path, "output file (default stdout)");

    auto* construct = app.add_subcommand("construct", "emit the explicit power-dominating set");
    construct->add_option("--k", k_text)->required();
    construct->add_flag("--verify", verify, "run the propagation engine on the set");
    construct->add_option("--out", out_path);

    auto* propagate = app.add_subcommand("propagate", "run the monitoring process, emit the trace");
    propagate->add_option("--k", k_text)->required();
    propagate->add_option("--set", set_file, "JSON file with [[x,y,z],...]");
    propagate->add_flag("--triangle", triangle, "seed with the corner triangle set (implies --monitored)");
    propagate->add_flag("--monitored", monitored, "treat the set as already monitored (skip the domination step)");
    propagate->add_option("--format", format, "jsonl|tikz")
        ->default_val("jsonl")
        ->check(CLI::IsMember({"jsonl", "tikz"}));
    propagate->add_option("--out", out_path);

    auto* radius = app.add_subcommand("radius", "propagation radius of a set");
    radius->add_option("--k", k_text)->required();
    radius->add_option("--set", set_file);
    radius->add_flag("--triangle", triangle);
    radius->add_flag("--monitored", monitored);
    radius->add_option("--out", out_path);

    auto* solve = app.add_subcommand("solve", "exact minimum power domination by exhaustive search");
    solve->add_option("--k", k_text, "k or range A..B")->required();
    solve->add_option("--k-range", k_text, "alias for --k with a range");
    solve->add_option("--size-cap", size_cap, "largest set size to try");
    solve->add_flag("--symmetry", symmetry, "search orbit representatives only");
    solve->add_flag("--serial", serial, "use the serial reference engine");
    solve->add_flag("--timing", timing, "include wall-clock fields in the output");
    solve->add_option("--out", out_path, "write results as JSON");

    auto* shift_demo = app.add_subcommand("shift-demo", "run the shifting process on a set");
    shift_demo->add_option("--k", k_text)->required();
    shift_demo->add_option("--seed", seed, "seed for the random input set");
    shift_demo->add_option("--set", set_file, "JSON file instead of a random set");
    shift_demo->add_option("--max-steps", max_steps, "limit rendered steps (0 = all)");
    shift_demo->add_option("--format", format, "table|json|tikz")
        ->default_val("table")
        ->check(CLI::IsMember({"table", "json", "tikz"}));
    shift_demo->add_option("--out", out_path);

    auto* experiments = app.add_subcommand("experiments", "lemma/claim property suites");
    experiments->add_option("--k", k_text, "k or range A..B")->required();
    experiments->add_option("--k-range", k_text, "alias for --k with a range");
    experiments->add_option("--seed", seed);
    experiments->add_option("--samples", samples, "random sets per k for the lemma suites");
    experiments->add_option("--pds-samples", pds_samples, "random power-dominating sets per k");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        KRange range = parse_k_range(k_text);
        auto single_k = [&]() {
            if (range.lo != range.hi)
                throw std::domain_error("this subcommand expects a single k, not a range");
            return range.lo;
        };
        if (gen->parsed()) return cmd_gen(single_k(), format, out_path);
        if (construct->parsed()) return cmd_construct(single_k(), verify, out_path);
        if (propagate->parsed())
            return cmd_propagate(single_k(), set_file, triangle, monitored, format, out_path);
        if (radius->parsed())
            return cmd_radius(single_k(), set_file, triangle, monitored, out_path);
        if (solve->parsed())
            return cmd_solve(range, size_cap, symmetry, serial, timing, out_path);
        if (shift_demo->parsed())
            return cmd_shift_demo(single_k(), seed, set_file, max_steps, format, out_path);
        if (experiments->parsed()) return cmd_experiments(range, seed, samples, pds_samples);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
