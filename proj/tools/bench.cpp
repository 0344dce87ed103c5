// Benchmark: serial reference kernels vs their OpenMP counterparts on the
// exact enumeration cores. Results must agree bit-for-bit; timings are
// best-of-R wall clock.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "efl/coloring.hpp"
#include "efl/engines.hpp"
#include "efl/generators.hpp"

using namespace efl;

namespace {

using Clock = std::chrono::steady_clock;

double time_best(const std::function<void()>& fn, int reps) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = Clock::now();
        fn();
        double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        if (ms < best) best = ms;
    }
    return best;
}

void report(const std::string& name, double serial_ms, double parallel_ms, bool equal) {
    std::printf("%-34s %10.2f ms %10.2f ms %8.2fx   %s\n", name.c_str(), serial_ms, parallel_ms,
                serial_ms / parallel_ms, equal ? "results equal" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    int reps = argc > 1 ? std::atoi(argv[1]) : 3;
    std::printf("threads: %d, reps: %d\n\n", omp_get_max_threads(), reps);
    std::printf("%-34s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");

    // A triangle-patterned n=3 instance keeps every kernel nontrivial.
    auto tri3 = parse_hypergraph("a b c\na d e\nb d f");

    {
        auto aux = build_aux(tri3, AuxKind::G2);
        auto trees_o = orient_G2_pathlike(tri3);
        auto full = complete_orientation(trees_o.first, trees_o.second);
        auto target = flatten_degrees(in_degrees(aux.n, full));
        RationalField k;
        auto grid = default_grid(k, target);
        auto eval = [&](const std::vector<Rat>& pt) { return eval_P(k, PolyKind::P2, aux, pt); };

        Rat serial_res, parallel_res;
        double s = time_best([&] {
            serial_res = k.zero();
            for (int rep = 0; rep < 40; ++rep)
                serial_res = k.add(serial_res, coefficient_by_formula(k, eval, target, grid, false));
        }, reps);
        double p = time_best([&] {
            parallel_res = k.zero();
            for (int rep = 0; rep < 40; ++rep)
                parallel_res = k.add(parallel_res, coefficient_by_formula(k, eval, target, grid, true));
        }, reps);
        report("coefficient_by_formula (P2/Q)", s, p, serial_res == parallel_res);
    }

    {
        // Denser orientation workload: a random n=6 instance with 12 bundles.
        GenParams gp;
        gp.family = Family::Random;
        gp.n = 6;
        auto h = generate(gp, 3);
        auto aux = build_aux(h, AuxKind::G1);
        auto ident = orient_G1(aux);
        auto full = complete_orientation(aux, ident);
        auto target = flatten_degrees(in_degrees(aux.n, full));

        Int serial_res, parallel_res;
        double s = time_best([&] { serial_res = coefficient_by_orientations(aux, target); }, reps);
        double p = time_best([&] { parallel_res = coefficient_by_orientations_parallel(aux, target); }, reps);
        report("coefficient_by_orientations (G1)", s, p, serial_res == parallel_res);
    }

    {
        auto aux = build_aux(tri3, AuxKind::G2);
        RationalField k;
        SweepResult serial_res, parallel_res;
        double s = time_best([&] { serial_res = vanishing_sweep(k, PolyKind::P2, aux, false); }, reps);
        double p = time_best([&] { parallel_res = vanishing_sweep(k, PolyKind::P2, aux, true); }, reps);
        bool eq = serial_res.nonzero == parallel_res.nonzero && serial_res.mismatches == parallel_res.mismatches &&
                  serial_res.first_mismatch == parallel_res.first_mismatch;
        report("vanishing_sweep (P2/Q, 3^9)", s, p, eq);
    }

    return 0;
}
