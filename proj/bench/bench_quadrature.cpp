// Serial vs OpenMP-parallel quadrature kernels on a realistic load:
// Gram matrices of ladder families.  Not a test; results go to stdout.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ladderkit/quadrature.hpp"

using namespace ladderkit;

namespace {

double now() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
#endif
}

double run(const std::vector<Wavefunction>& fam, bool parallel, double* checksum) {
    QuadratureOptions opt;
    opt.parallel = parallel;
    const double t0 = now();
    const auto g = gram_matrix(fam, opt);
    const double dt = now() - t0;
    *checksum = 0;
    for (const auto& row : g)
        for (double v : row) *checksum += v;
    return dt;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp: %d threads available\n", omp_get_max_threads());
#else
    std::printf("openmp: compiled without OpenMP; both runs are serial\n");
#endif

    const struct {
        SystemId id;
        long level;
        long count;
    } families[] = {
        {SystemId::osc3d, 0, 8},
        {SystemId::coul3d, 0, 8},
        {SystemId::sho1d, 0, 10},
    };

    for (const auto& f : families) {
        std::vector<Wavefunction> fam;
        for (long k = 0; k < f.count; ++k) fam.push_back(build_by_rodrigues(f.id, {f.level, k}));

        double sum_serial = 0, sum_parallel = 0;
        const double warm = run(fam, true, &sum_parallel);  // touch caches
        (void)warm;
        const double ts = run(fam, false, &sum_serial);
        const double tp = run(fam, true, &sum_parallel);
        std::printf(
            "%-7s level %ld, %ldx%ld gram: serial %8.3f ms   parallel %8.3f ms   speedup %.2fx   "
            "results %s\n",
            system(f.id).name.c_str(), f.level, f.count, f.count, ts * 1e3, tp * 1e3,
            tp > 0 ? ts / tp : 0.0, sum_serial == sum_parallel ? "bit-identical" : "DIFFER");
    }
    return 0;
}
