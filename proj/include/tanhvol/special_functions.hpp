#pragma once

#include <cmath>

namespace tanhvol {

inline constexpr double kSqrt2Pi = 2.506628274631000502415765284811;
inline constexpr double kInvSqrt2Pi = 0.3989422804014326779399460599344;
inline constexpr double kInvSqrt2 = 0.7071067811865475244008443621048;
inline constexpr double kTwoInvSqrtPi = 1.1283791670955125738961589031215;  // 2/sqrt(pi)

/// Standard normal cumulative distribution function.
/// Evaluated through the complementary error function so the tails keep
/// full absolute accuracy: N(x) = erfc(-x/sqrt(2))/2.
double norm_cdf(double x);

/// Standard normal density.
inline double norm_pdf(double x) noexcept {
    return kInvSqrt2Pi * std::exp(-0.5 * x * x);
}

/// Error function, erf(z) = 2/sqrt(pi) * int_0^z exp(-t^2) dt.
double erf(double z);

/// Inverse hyperbolic tangent, (1/2)*log((1+x)/(1-x)).
/// Throws domain_error for |x| >= 1.
double arctanh(double x);

/// Scaled complementary error function exp(t^2)*erfc(t) for t >= 0.
double erfcx(double t);

/// exp(a^2/2) * N(-y) for y >= 0, computed without premature overflow or
/// underflow of the two factors.
double scaled_normal_tail(double a, double y);

}  // namespace tanhvol
