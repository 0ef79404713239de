// Benchmark comparing the serial reference paths against the OpenMP kernels:
// all-pairs compatibility validation and the symmetry-candidate scan.

#include <chrono>
#include <iostream>

#include "ptri/refine.hpp"
#include "ptri/symmetry.hpp"
#include "ptri/triangulation.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace ptri;
using Clock = std::chrono::steady_clock;

namespace {

double seconds(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

void bench_validate(const Complex& t, int par_threads) {
    // fresh caches so both paths do the same work
    CompatCache c1, c2;
    ValidateOptions serial{1, &c1, false, nullptr};
    ValidateOptions parallel{par_threads, &c2, false, nullptr};
    auto t0 = Clock::now();
    ValidationReport r1 = validate(t, serial);
    auto t1 = Clock::now();
    ValidationReport r2 = validate(t, parallel);
    auto t2 = Clock::now();
    if (r1.valid != r2.valid) {
        std::cerr << "MISMATCH between serial and parallel validation\n";
        std::exit(1);
    }
    double s = seconds(t0, t1), p = seconds(t1, t2);
    std::cout << "  validate dim " << t.n << " (" << t.classes.size() << " classes): serial "
              << s << " s, " << par_threads << " threads " << p << " s, speedup " << s / p
              << "\n";
}

void bench_stabilizer(const Complex& t, int par_threads) {
    IsoOptions serial{1, false}, parallel{par_threads, false};
    auto t0 = Clock::now();
    long o1 = stabilizer(t, serial).point_group.order();
    auto t1 = Clock::now();
    long o2 = stabilizer(t, parallel).point_group.order();
    auto t2 = Clock::now();
    if (o1 != o2) {
        std::cerr << "MISMATCH between serial and parallel stabilizer\n";
        std::exit(1);
    }
    double s = seconds(t0, t1), p = seconds(t1, t2);
    std::cout << "  stabilizer dim " << t.n << " (order " << o1 << "): serial " << s << " s, "
              << par_threads << " threads " << p << " s, speedup " << s / p << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    int threads =
#ifdef _OPENMP
        omp_get_max_threads();
#else
        1;
#endif
    if (argc > 1) threads = std::atoi(argv[1]);
    std::cout << "serial reference vs OpenMP kernels (" << threads << " threads)\n";
    bench_validate(freudenthal_seed(4), threads);
    bench_validate(freudenthal_seed(5), threads);
    bench_stabilizer(freudenthal_seed(4), threads);
    bench_stabilizer(freudenthal_seed(5), threads);
    return 0;
}
