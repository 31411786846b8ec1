#include "tanhvol/tanh_surrogate.hpp"

#include "tanhvol/errors.hpp"
#include "tanhvol/special_functions.hpp"
#include "tanhvol/standardized_call.hpp"

#include <bit>
#include <cmath>
#include <cstdint>

namespace tanhvol {

SurrogateCoefficients coefficients(double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw domain_error("coefficients: alpha must be positive");

    // k = 1 - 2*chi(1) = 2*exp(alpha^2/2)*N(-alpha) = erfcx(alpha/sqrt(2));
    // positive for every alpha by the Komatsu-Pollak estimate.
    const double k = 2.0 * scaled_normal_tail(alpha, alpha);
    const double chi1 = 0.5 * (1.0 - k);
    if (chi1 < 1e-12)
        throw conditioning_error("coefficients: chi(1) too small, use the ATM branch");

    const double chip1 = alpha * kInvSqrt2Pi;  // chi'(1)
    const double g = chi1 * (1.0 - chi1);
    const double denom = 4.0 * g * g;

    const double c2 = k * chip1 * chip1 / denom;
    const double c1 = chip1 * (2.0 * g - k * chip1) / denom;
    // arctanh(2*chi(1)-1) = -arctanh(k), with k taken from the scaled tail
    // directly so nothing cancels when chi(1) is near 1/2.
    const double c3 = -arctanh(k) + chip1 * (k * chip1 - g) / (2.0 * g * g);

    return {c1, c2, c3, alpha};
}

double phi(const SurrogateCoefficients& co, double x) {
    if (!(x > 0.0) || !std::isfinite(x)) throw domain_error("phi: x must be positive");
    return co.c1 * x - co.c2 / x + co.c3;
}

double chi_hat(const SurrogateCoefficients& co, double x) {
    return 0.5 * (1.0 + std::tanh(phi(co, x)));
}

double chi_hat(double alpha, double x) {
    thread_local SurrogateCoefficients cache{0.0, 0.0, 0.0, 0.0};
    thread_local std::uint64_t cached_bits = 0;

    const auto bits = std::bit_cast<std::uint64_t>(alpha);
    if (bits != cached_bits || cache.alpha == 0.0) {
        cache = coefficients(alpha);
        cached_bits = bits;
    }
    return chi_hat(cache, x);
}

double call_hat(const NormalizedTerms& terms, double sigma) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) throw invalid_input("call_hat: sigma must be positive");
    const double alpha = alpha_of(terms);
    const double value = chi_hat(alpha, sigma * std::sqrt(terms.maturity) / alpha);
    const double s = terms.spot;
    const double x = terms.discounted_strike;
    return x > s ? s * value : (s - x) + x * value;
}

double atm_call_exact(double spot, double maturity, double sigma) {
    if (!(spot > 0.0) || !(maturity > 0.0) || !(sigma > 0.0))
        throw invalid_input("atm_call_exact: inputs must be positive");
    return spot * std::erf(sigma * std::sqrt(0.125 * maturity));
}

double theta(AtmKind kind, double z) {
    if (!std::isfinite(z)) throw domain_error("theta: z must be finite");
    switch (kind) {
        case AtmKind::Theta0:
            return std::tanh(kTwoInvSqrtPi * z);
        case AtmKind::Theta1: {
            static const double cubic = (8.0 - 2.0 * M_PI) / (3.0 * std::sqrt(M_PI * M_PI * M_PI));
            return std::tanh(kTwoInvSqrtPi * z + cubic * z * z * z);
        }
        case AtmKind::Theta2:
            return std::tanh(kTheta2A * z + kTheta2B * z * z * z);
    }
    throw invalid_input("theta: unknown kind");
}

double atm_call_hat(AtmKind kind, double spot, double maturity, double sigma) {
    if (!(spot > 0.0) || !(maturity > 0.0) || !(sigma > 0.0))
        throw invalid_input("atm_call_hat: inputs must be positive");
    return spot * theta(kind, sigma * std::sqrt(0.125 * maturity));
}

}  // namespace tanhvol
