#include "tanhvol/standardized_call.hpp"

#include "tanhvol/errors.hpp"
#include "tanhvol/special_functions.hpp"

#include <cmath>

namespace tanhvol {

namespace {

void check_domain(double alpha, double x, const char* who) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw domain_error(std::string(who) + ": alpha must be positive");
    if (!(x > 0.0) || !std::isfinite(x)) throw domain_error(std::string(who) + ": x must be positive");
}

}  // namespace

double alpha_of(const NormalizedTerms& terms) {
    validate(terms);
    const double log_moneyness = std::log(terms.spot / terms.discounted_strike);
    if (std::fabs(log_moneyness) < kAtmLogThreshold)
        throw atm_degenerate("alpha_of: |log(S/X)| below ATM threshold");
    return std::sqrt(2.0 * std::fabs(log_moneyness));
}

double chi(double alpha, double x) {
    check_domain(alpha, x, "chi");
    const double inv_x = 1.0 / x;
    const double z1 = 0.5 * alpha * (x - inv_x);
    const double z2 = 0.5 * alpha * (x + inv_x);
    return norm_cdf(z1) - scaled_normal_tail(alpha, z2);
}

double chi_prime(double alpha, double x) {
    check_domain(alpha, x, "chi_prime");
    const double d = x - 1.0 / x;
    return alpha * kInvSqrt2Pi * std::exp(-0.125 * alpha * alpha * d * d);
}

double chi_second(double alpha, double x) {
    check_domain(alpha, x, "chi_second");
    const double d = x - 1.0 / x;
    const double shape = 1.0 / (x * x * x) - x;  // (1-x^4)/x^3 without overflow
    return 0.25 * alpha * alpha * alpha * kInvSqrt2Pi *
           std::exp(-0.125 * alpha * alpha * d * d) * shape;
}

double call_from_chi(const NormalizedTerms& terms, double sigma) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) throw invalid_input("call_from_chi: sigma must be positive");
    const double alpha = alpha_of(terms);
    const double value = chi(alpha, sigma * std::sqrt(terms.maturity) / alpha);
    const double s = terms.spot;
    const double x = terms.discounted_strike;
    return x > s ? s * value : (s - x) + x * value;
}

}  // namespace tanhvol
