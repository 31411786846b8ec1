// Benchmark: OpenMP sweep kernels against the serial reference. Also
// asserts the two paths agree exactly, which is the whole point of keeping
// the reference around.
#include "tanhvol/csv.hpp"
#include "tanhvol/sweeps.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdio>
#include <cstring>

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool stats_equal(const tanhvol::ErrorStats& a, const tanhvol::ErrorStats& b) {
    return a.max_abs == b.max_abs && a.mean_abs == b.mean_abs && a.rmse == b.rmse &&
           a.q50 == b.q50 && a.q90 == b.q90 && a.q99 == b.q99 && a.count == b.count;
}

}  // namespace

int main(int argc, char** argv) {
    int repeats = 3;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--quick") == 0) repeats = 1;

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; parallel path runs serially\n");
#endif

    tanhvol::SweepSpec sweep;  // paper-sized defaults: 500 x 10000 samples
    tanhvol::LatticeSpec lattice;

    double t_serial = 1e300;
    double t_parallel = 1e300;
    tanhvol::SweepResult serial_res{};
    tanhvol::SweepResult parallel_res{};
    for (int r = 0; r < repeats; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        serial_res = tanhvol::run_moneyness_sweep_serial(sweep, nullptr);
        t_serial = std::min(t_serial, seconds_since(t0));

        t0 = std::chrono::steady_clock::now();
        parallel_res = tanhvol::run_moneyness_sweep_parallel(sweep, nullptr, 0);
        t_parallel = std::min(t_parallel, seconds_since(t0));
    }
    std::printf("moneyness sweep  serial %.3fs  parallel %.3fs  speedup %.2fx  identical=%s\n",
                t_serial, t_parallel, t_serial / t_parallel,
                stats_equal(serial_res.stats, parallel_res.stats) ? "yes" : "NO");

    double e_serial = 1e300;
    double e_parallel = 1e300;
    tanhvol::ErfStudyResult erf_serial{};
    tanhvol::ErfStudyResult erf_parallel{};
    for (int r = 0; r < repeats; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        erf_serial = tanhvol::run_lattice_erf_study_serial(lattice, nullptr);
        e_serial = std::min(e_serial, seconds_since(t0));

        t0 = std::chrono::steady_clock::now();
        erf_parallel = tanhvol::run_lattice_erf_study_parallel(lattice, nullptr, 0);
        e_parallel = std::min(e_parallel, seconds_since(t0));
    }
    const bool erf_same = stats_equal(erf_serial.per_theta[0], erf_parallel.per_theta[0]) &&
                          stats_equal(erf_serial.per_theta[1], erf_parallel.per_theta[1]) &&
                          stats_equal(erf_serial.per_theta[2], erf_parallel.per_theta[2]);
    std::printf("erf study        serial %.3fs  parallel %.3fs  speedup %.2fx  identical=%s\n",
                e_serial, e_parallel, e_serial / e_parallel, erf_same ? "yes" : "NO");

    const bool ok = stats_equal(serial_res.stats, parallel_res.stats) && erf_same;
    std::printf("sweep.full.max_abs=%s\n", tanhvol::format_sig(serial_res.stats.max_abs).c_str());
    return ok ? 0 : 1;
}
