#include "tanhvol/comparators.hpp"

#include <cmath>

namespace tanhvol {

const char* comparator_name(ComparatorKind kind) {
    switch (kind) {
        case ComparatorKind::BrennerSubrahmanyam: return "brenner-subrahmanyam";
        case ComparatorKind::CorradoMiller: return "corrado-miller";
        case ComparatorKind::Li: return "li";
    }
    return "unknown";
}

namespace {

// Shared Corrado-Miller family kernel; `radicand_factor` multiplies the
// (S-X)^2/pi correction term under the radical.
std::optional<double> quadratic_family(const CallQuote& q, double radicand_factor) {
    const double s = q.terms.spot;
    const double x = q.terms.discounted_strike;
    const double y = q.price - 0.5 * (s - x);
    const double rad = y * y - radicand_factor * (s - x) * (s - x) / M_PI;
    if (rad < 0.0) return std::nullopt;
    const double v = std::sqrt(2.0 * M_PI) / (s + x) * (y + std::sqrt(rad));
    return v / std::sqrt(q.terms.maturity);
}

}  // namespace

std::optional<VolEstimate> comparator_iv(ComparatorKind kind, const CallQuote& quote) {
    validate(quote);

    std::optional<double> sigma;
    Method method = Method::BrennerSubrahmanyam;
    switch (kind) {
        case ComparatorKind::BrennerSubrahmanyam:
            sigma = std::sqrt(2.0 * M_PI / quote.terms.maturity) * quote.price / quote.terms.spot;
            method = Method::BrennerSubrahmanyam;
            break;
        case ComparatorKind::CorradoMiller:
            sigma = quadratic_family(quote, 1.0);
            method = Method::CorradoMiller;
            break;
        case ComparatorKind::Li:
            sigma = quadratic_family(quote, 1.85);
            method = Method::Li;
            break;
    }

    if (!sigma || !std::isfinite(*sigma) || !(*sigma > 0.0)) return std::nullopt;
    return VolEstimate{*sigma, method};
}

}  // namespace tanhvol
