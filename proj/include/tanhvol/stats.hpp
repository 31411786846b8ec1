#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace tanhvol {

/// Aggregate error measures from a harness sweep. Quantiles are
/// nearest-rank over the absolute errors.
struct ErrorStats {
    double max_abs = 0.0;
    double mean_abs = 0.0;
    double rmse = 0.0;
    double q50 = 0.0;
    double q90 = 0.0;
    double q99 = 0.0;
    std::int64_t count = 0;
    std::int64_t count_unavailable = 0;
};

/// Fixed-topology pairwise summation: the result depends only on the order
/// of the input array, never on how work was split across threads.
double pairwise_sum(std::span<const double> values);

/// Builds the stats block from absolute errors (copied; sorted internally).
ErrorStats compute_error_stats(std::vector<double> abs_errors, std::int64_t unavailable = 0);

}  // namespace tanhvol
