// Compares the serial reference engine against the OpenMP block engine and
// the symmetry-reduced search, plus raw propagation throughput.
//
// Usage: tridom_bench [max_k_unreduced] [max_k_symmetry]

#include <chrono>
#include <cstdlib>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tridom/construction.hpp"
#include "tridom/propagation.hpp"
#include "tridom/sampling.hpp"
#include "tridom/solver.hpp"

using namespace tridom;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void bench_solvers(int max_k_unreduced, int max_k_symmetry) {
    std::cout << "k\tengine\tgamma_p\tsets_tested\tms\tspeedup_vs_serial\n";
    for (int k = 4; k <= max_k_unreduced; ++k) {
        TriGrid g(k);

        auto t0 = Clock::now();
        SolveResult serial = min_pds_serial(g);
        double serial_ms = ms_since(t0);
        std::cout << k << "\tserial\t" << *serial.gamma_p << "\t" << serial.sets_tested << "\t"
                  << serial_ms << "\t1.00\n";

        t0 = Clock::now();
        SolveResult parallel = min_pds(g);
        double parallel_ms = ms_since(t0);
        if (parallel.witness != serial.witness) {
            std::cerr << "engine mismatch at k=" << k << "\n";
            std::exit(1);
        }
        std::cout << k << "\tparallel\t" << *parallel.gamma_p << "\t" << parallel.sets_tested
                  << "\t" << parallel_ms << "\t" << serial_ms / parallel_ms << "\n";

        t0 = Clock::now();
        SolveResult sym = min_pds_with_symmetry(g);
        double sym_ms = ms_since(t0);
        std::cout << k << "\tsymmetry\t" << *sym.gamma_p << "\t" << sym.sets_tested << "\t"
                  << sym_ms << "\t" << serial_ms / sym_ms << "\n";
    }

    for (int k = max_k_unreduced + 1; k <= max_k_symmetry; ++k) {
        TriGrid g(k);
        VertexSet witness = construct_pds(g);
        auto t0 = Clock::now();
        SolveResult r = min_pds_with_symmetry(g, std::nullopt, &witness);
        std::cout << k << "\tsymmetry+witness\t" << *r.gamma_p << "\t" << r.sets_tested << "\t"
                  << ms_since(t0) << "\t-\n";
    }
}

void bench_propagation(int k, int iterations) {
    TriGrid g(k);
    PropagationWorkspace ws;
    long long monitored_total = 0;
    auto t0 = Clock::now();
    for (int i = 0; i < iterations; ++i) {
        VertexSet s = random_subset_of_size(g, 3, sample_seed(1, k, i));
        auto members = s.to_vector();
        monitored_total += monitored_count(g, members, ws);
    }
    double ms = ms_since(t0);
    std::cout << "propagation: T_" << k << ", " << iterations << " random 3-sets in " << ms
              << " ms (" << 1000.0 * iterations / ms << " sets/s, checksum " << monitored_total
              << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
    int max_k_unreduced = argc > 1 ? std::atoi(argv[1]) : 6;
    int max_k_symmetry = argc > 2 ? std::atoi(argv[2]) : 9;
#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (built without OpenMP)\n";
#endif
    bench_solvers(max_k_unreduced, max_k_symmetry);
    bench_propagation(8, 20000);
    return 0;
}
