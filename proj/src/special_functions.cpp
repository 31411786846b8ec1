#include "tanhvol/special_functions.hpp"

#include "tanhvol/errors.hpp"

#include <cmath>

namespace tanhvol {

double norm_cdf(double x) {
    if (std::isnan(x)) throw domain_error("norm_cdf: NaN input");
    return 0.5 * std::erfc(-x * kInvSqrt2);
}

double erf(double z) {
    if (std::isnan(z)) throw domain_error("erf: NaN input");
    return std::erf(z);
}

double arctanh(double x) {
    if (!(x > -1.0 && x < 1.0)) throw domain_error("arctanh: |x| >= 1");
    return std::atanh(x);
}

namespace {

// erfc(t)*exp(t^2) by the asymptotic series, usable once exp(t^2) overflows
// or erfc(t) underflows (t >= ~21 keeps every term well below 1e-18).
double erfcx_asymptotic(double t) {
    const double r = 1.0 / (2.0 * t * t);
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k <= 12; ++k) {
        term *= -static_cast<double>(2 * k - 1) * r;
        sum += term;
    }
    return sum / (t * std::sqrt(M_PI));
}

}  // namespace

double erfcx(double t) {
    if (!(t >= 0.0)) throw domain_error("erfcx: negative or NaN input");
    if (t < 21.0) return std::exp(t * t) * std::erfc(t);
    return erfcx_asymptotic(t);
}

double scaled_normal_tail(double a, double y) {
    if (!(y >= 0.0)) throw domain_error("scaled_normal_tail: y < 0");
    if (y < 29.0 && a < 29.0) return std::exp(0.5 * a * a) * 0.5 * std::erfc(y * kInvSqrt2);
    // 0.5 * erfcx(y/sqrt2) * exp((a-y)(a+y)/2); the exponent is <= 0 whenever
    // y >= a, so the product cannot overflow there.
    return 0.5 * erfcx(y * kInvSqrt2) * std::exp(0.5 * (a - y) * (a + y));
}

}  // namespace tanhvol
