// Serial reference vs OpenMP kernels on the exhaustive scans.
//
//   bench_kernels [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "expmat/equiv.hpp"
#include "expmat/kernels.hpp"
#include "expmat/modrep.hpp"

using namespace expmat;

namespace {

double best_ms(int repeats, const std::function<void()>& fn) {
    double best = 1e300;
    for (int i = 0; i < repeats; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void row(const char* name, int repeats, const std::function<void()>& serial, const std::function<void()>& par) {
    const double s = best_ms(repeats, serial);
    const double p = best_ms(repeats, par);
    std::printf("%-34s %10.2f %10.2f %8.2fx\n", name, s, p, p > 0 ? s / p : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
    const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
    std::printf("threads: %d\n", kernels::thread_count());
    std::printf("%-34s %10s %10s %9s\n", "kernel", "serial ms", "omp ms", "speedup");

    const Field f2 = Field::prime(2), f3 = Field::prime(3), f4 = Field::galois(2, 2);

    row("nilpotent_matrices GF(4) n=3", repeats, [&] { (void)kernels::serial::nilpotent_matrices(f4, 3); },
        [&] { (void)kernels::omp::nilpotent_matrices(f4, 3); });

    row("enumerate_tuples F_2 n=3 r=2", repeats, [&] { (void)enumerate_tuples_serial(f2, 3, 2); },
        [&] { (void)enumerate_tuples(f2, 3, 2); });

    // Non-equivalent pair: forces a full scan of GL(3, F_3).
    const ExpMat a1 = build_from_tuple(NilTuple::make(f3, 3, {make_const(f3, {{0, 1, 0}, {0, 0, 0}, {0, 0, 0}})}));
    const ExpMat a2 = ExpMat::identity(f3, 3);
    SearchOptions opts;
    opts.budget = 1ull << 24;
    row("search_equiv GL(3,F_3) negative", repeats, [&] { (void)search_equiv_serial(a1, a2, opts); },
        [&] { (void)search_equiv(a1, a2, opts); });

    const Rep rep(NilTuple::make(f3, 3, {make_const(f3, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}),
                                         make_const(f3, {{0, 0, 1}, {0, 0, 0}, {0, 0, 0}})}));
    row("verify_hom (Z/3)^2 on F_3^3", repeats, [&] { (void)verify_hom_serial(rep); }, [&] { (void)verify_hom(rep); });

    const GaAction mu(build_from_tuple(NilTuple::make(f2, 3, {make_const(f2, {{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}),
                                                              make_const(f2, {{0, 0, 1}, {0, 0, 0}, {0, 0, 0}})})));
    row("verify_action q=16 n=3", repeats, [&] { (void)verify_action_serial(mu, 16); },
        [&] { (void)verify_action(mu, 16); });
    return 0;
}
