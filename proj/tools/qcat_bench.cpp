// qcat_bench — timings of the OpenMP kernels against their serial
// references, plus two protocol-level scenarios. Prints a fixed-width table;
// thread count comes from OMP_NUM_THREADS.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qcat/advopt.hpp"
#include "qcat/kernels.hpp"
#include "qcat/qstate.hpp"
#include "qcat/teleporter.hpp"

using namespace qcat;

namespace {

double time_of(const std::function<void()>& f, int reps) {
    using clock = std::chrono::steady_clock;
    f(); // warm-up
    auto t0 = clock::now();
    for (int i = 0; i < reps; ++i) f();
    auto t1 = clock::now();
    return std::chrono::duration<double>(t1 - t0).count() / reps;
}

ComplexMatrix random_matrix(std::size_t n, Rng& rng) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.complex_normal();
    return m;
}

void row(const char* name, double serial, double parallel) {
    std::printf("%-28s %10.4f ms %10.4f ms %8.2fx\n", name, serial * 1e3, parallel * 1e3,
                serial / parallel);
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (OpenMP disabled)\n");
#endif
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    Rng rng(20240517);
    const std::size_t n = 512;
    ComplexMatrix a = random_matrix(n, rng);
    ComplexMatrix b = random_matrix(n, rng);
    row("matmul 512",
        time_of([&] { kernels::matmul_serial(a, b); }, 3),
        time_of([&] { kernels::matmul(a, b); }, 3));

    ComplexMatrix small_a = random_matrix(27, rng);
    ComplexMatrix small_b = random_matrix(27, rng);
    row("kron 27x27 -> 729",
        time_of([&] { kernels::kron_serial(small_a, small_b); }, 20),
        time_of([&] { kernels::kron(small_a, small_b); }, 20));

    ComplexMatrix big = random_matrix(729, rng);
    ComplexMatrix herm = (big + big.adjoint()) * cdouble{0.5, 0.0};
    std::vector<std::size_t> dims{9, 9, 9};
    row("partial_trace 729 -> 9",
        time_of([&] { kernels::partial_trace_serial(herm, dims, {0}); }, 10),
        time_of([&] { kernels::partial_trace(herm, dims, {0}); }, 10));

    std::vector<std::size_t> perm{2, 0, 1};
    row("permute_factors 729",
        time_of([&] { kernels::permute_factors_serial(herm, dims, perm); }, 10),
        time_of([&] { kernels::permute_factors(herm, dims, perm); }, 10));

    ComplexMatrix ua = haar_random_unitary(27, rng);
    ComplexMatrix ub = haar_random_unitary(27, rng);
    row("sandwich_cut 27(x)27",
        time_of([&] { kernels::sandwich_cut_serial(ua, ub, herm); }, 2),
        time_of([&] { kernels::sandwich_cut(ua, ub, herm); }, 2));

    // protocol-level scenarios (parallel path only)
    std::vector<cdouble> v(9, cdouble{0.0, 0.0});
    v[0] = v[4] = 1.0 / std::sqrt(2.0);
    DensityMatrix singlet3 = from_pure(PureState(std::move(v), {3, 3}));
    double t_mc = time_of([&] { avg_fidelity_mc(singlet3, 2000, 7); }, 1);
    std::printf("%-28s %24.1f ms\n", "avg_fidelity_mc 2000@d=3", t_mc * 1e3);

    double t_map = time_of([&] { advantage_map(0.05); }, 1);
    std::printf("%-28s %24.1f ms\n", "advantage_map res=0.05", t_map * 1e3);
    return 0;
}
