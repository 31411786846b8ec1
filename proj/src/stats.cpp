#include "tanhvol/stats.hpp"

#include <algorithm>
#include <cmath>

namespace tanhvol {

double pairwise_sum(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n == 0) return 0.0;
    if (n <= 8) {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

namespace {

double nearest_rank(const std::vector<double>& sorted, double p) {
    if (sorted.empty()) return 0.0;
    const auto n = static_cast<std::size_t>(sorted.size());
    auto rank = static_cast<std::size_t>(std::ceil(p * static_cast<double>(n)));
    if (rank == 0) rank = 1;
    if (rank > n) rank = n;
    return sorted[rank - 1];
}

}  // namespace

ErrorStats compute_error_stats(std::vector<double> abs_errors, std::int64_t unavailable) {
    ErrorStats out;
    out.count = static_cast<std::int64_t>(abs_errors.size());
    out.count_unavailable = unavailable;
    if (abs_errors.empty()) return out;

    const std::size_t n = abs_errors.size();
    std::vector<double> squares(n);
    for (std::size_t i = 0; i < n; ++i) squares[i] = abs_errors[i] * abs_errors[i];

    out.mean_abs = pairwise_sum(abs_errors) / static_cast<double>(n);
    out.rmse = std::sqrt(pairwise_sum(squares) / static_cast<double>(n));

    std::sort(abs_errors.begin(), abs_errors.end());
    out.max_abs = abs_errors.back();
    out.q50 = nearest_rank(abs_errors, 0.50);
    out.q90 = nearest_rank(abs_errors, 0.90);
    out.q99 = nearest_rank(abs_errors, 0.99);
    return out;
}

}  // namespace tanhvol
