#pragma once

#include "tanhvol/baseline.hpp"
#include "tanhvol/stats.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>

namespace tanhvol {

/// Monte Carlo sweep of chi - chi_hat over random (moneyness, sigma) pairs
/// at a fixed maturity. Moneyness S/X is log-uniform with draws inside the
/// sampling ATM band nudged to the band edge; sigma is uniform on
/// (sigma_lo, sigma_hi].
struct SweepSpec {
    double sigma_lo = 0.0;
    double sigma_hi = 1.25;
    int sigma_samples = 500;
    int moneyness_samples = 10000;
    double maturity = 0.25;
    double moneyness_lo = 0.5;
    double moneyness_hi = 2.0;
    std::uint64_t seed = 42;
};

/// |log(S/X)| floor used when sampling sweep moneyness; keeps the sweep out
/// of the degenerate alpha -> 0 regime that belongs to the ATM formulas.
inline constexpr double kSweepAtmBand = 1e-3;

struct SweepResult {
    ErrorStats stats;                   ///< whole sigma interval
    std::array<ErrorStats, 5> parts;    ///< five equal sigma sub-intervals
};

/// erf(z) versus Theta0/Theta1/Theta2 with z = sigma*sqrt(T/8) drawn from
/// the lattice sigma = sigma_step*j (j = 1..sigma_count), T = k/12
/// (k = month_lo..month_hi), samples_per_cell draws per maturity.
struct LatticeSpec {
    double sigma_step = 1e-4;
    int sigma_count = 10000;
    int month_lo = 1;
    int month_hi = 24;
    int samples_per_cell = 10000;
    std::uint64_t seed = 42;
};

struct ErfStudyResult {
    std::array<ErrorStats, 3> per_theta;  ///< indexed by AtmKind order
};

/// Implied-volatility method comparison over a deterministic grid of
/// (S/X, T, sigma_true); prices are generated with bs_call, then inverted
/// with the dispatcher, the literature comparators, and the Newton oracle.
struct IvCompareSpec {
    double spot = 100.0;
    double moneyness_lo = 0.5;
    double moneyness_hi = 2.0;
    int moneyness_steps = 9;  ///< log-spaced, includes S/X = 1 when odd
    double t_lo = 0.1;
    double t_hi = 1.5;
    int t_steps = 15;
    double sigma_lo = 0.15;
    double sigma_hi = 1.25;
    int sigma_steps = 23;
    std::uint64_t seed = 42;  ///< echoed in headers; the grid is deterministic
};

struct IvMethodStats {
    double max_abs = 0.0;
    double mean_abs = 0.0;
    std::int64_t unavailable = 0;
};

struct IvCompareResult {
    std::int64_t cells_total = 0;
    std::int64_t cells_admissible = 0;
    std::int64_t cells_excluded = 0;  ///< price at the arbitrage bound or vega below resolution
    IvMethodStats tanh_hat;
    IvMethodStats brenner;
    IvMethodStats corrado_miller;
    IvMethodStats li;
    double oracle_max_abs = 0.0;  ///< Newton oracle vs true sigma, admissible cells
};

/// Every study has an OpenMP-parallel driver and a plain serial reference
/// implementation; outputs are byte-identical. `threads` <= 0 uses the
/// OpenMP default, 1 selects the serial path.
SweepResult run_moneyness_sweep_serial(const SweepSpec& spec, std::ostream* csv);
SweepResult run_moneyness_sweep_parallel(const SweepSpec& spec, std::ostream* csv, int threads);
SweepResult run_moneyness_sweep(const SweepSpec& spec, std::ostream* csv, int threads = 0);

ErfStudyResult run_lattice_erf_study_serial(const LatticeSpec& spec, std::ostream* csv);
ErfStudyResult run_lattice_erf_study_parallel(const LatticeSpec& spec, std::ostream* csv, int threads);
ErfStudyResult run_lattice_erf_study(const LatticeSpec& spec, std::ostream* csv, int threads = 0);

IvCompareResult run_iv_comparison_serial(const IvCompareSpec& spec, std::ostream* csv);
IvCompareResult run_iv_comparison_parallel(const IvCompareSpec& spec, std::ostream* csv, int threads);
IvCompareResult run_iv_comparison(const IvCompareSpec& spec, std::ostream* csv, int threads = 0);

/// The frozen-baseline metric bundle: default-spec sweep, erf study and IV
/// comparison, all keyed by the given seed.
BaselineDoc compute_baseline_metrics(std::uint64_t seed, int threads = 0);

}  // namespace tanhvol
