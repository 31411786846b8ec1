// Test-only reference implementations, independent of the library's
// evaluation paths. erf/erfc come from composite Gauss-Legendre quadrature
// of the Gaussian density in long double; everything else is evaluated in
// long double straight from the defining formulas.
#pragma once

#include <cmath>

namespace oracle {

inline constexpr long double kPi = 3.14159265358979323846264338327950288L;

namespace detail {

// 20-point Gauss-Legendre nodes/weights on [-1, 1].
inline constexpr long double kNodes[10] = {
    0.0765265211334973337546404L, 0.2277858511416450780804962L, 0.3737060887154195606725482L,
    0.5108670019508270980043641L, 0.6360536807265150254528367L, 0.7463319064601507926143051L,
    0.8391169718222188233945291L, 0.9122344282513259058677524L, 0.9639719272779137912676661L,
    0.9931285991850949247861224L};
inline constexpr long double kWeights[10] = {
    0.1527533871307258506980843L, 0.1491729864726037467878287L, 0.1420961093183820513292983L,
    0.1316886384491766268984945L, 0.1181945319615184173123774L, 0.1019301198172404350367501L,
    0.0832767415767047487247581L, 0.0626720483341090635695065L, 0.0406014298003869413310400L,
    0.0176140071391521183118620L};

inline long double panel(long double a, long double b) {
    const long double mid = 0.5L * (a + b);
    const long double half = 0.5L * (b - a);
    long double sum = 0.0L;
    for (int i = 0; i < 10; ++i) {
        const long double dx = half * kNodes[i];
        sum += kWeights[i] * (std::exp(-(mid + dx) * (mid + dx)) + std::exp(-(mid - dx) * (mid - dx)));
    }
    return half * sum;
}

// integral of exp(-t^2) over [a, b] with panels of width <= 1/2
inline long double gauss_integral(long double a, long double b) {
    const int panels = 1 + static_cast<int>((b - a) / 0.5L);
    long double sum = 0.0L;
    for (int i = 0; i < panels; ++i) {
        const long double lo = a + (b - a) * i / panels;
        const long double hi = a + (b - a) * (i + 1) / panels;
        sum += panel(lo, hi);
    }
    return sum;
}

}  // namespace detail

/// erfc(t) for t >= 0 with full relative precision: the tail integral is
/// truncated where exp(-s^2) is far below long-double resolution.
inline long double erfc(long double t) {
    const long double cutoff = std::sqrt(-std::log(1e-30L)) + 1.0L;  // exp(-s^2) <= 1e-30 beyond
    return 2.0L / std::sqrt(kPi) * detail::gauss_integral(t, t + cutoff);
}

inline long double erf(long double z) {
    if (z < 0.0L) return -erf(-z);
    if (z < 0.5L) return 2.0L / std::sqrt(kPi) * detail::gauss_integral(0.0L, z);
    return 1.0L - erfc(z);
}

inline long double norm_cdf(long double x) {
    const long double t = std::fabs(x) / std::sqrt(2.0L);
    return x <= 0.0L ? 0.5L * erfc(t) : 1.0L - 0.5L * erfc(t);
}

inline long double norm_pdf(long double x) {
    return std::exp(-0.5L * x * x) / std::sqrt(2.0L * kPi);
}

/// Black-Scholes call in long double.
inline long double bs_call(long double s, long double x, long double t, long double sigma) {
    const long double v = sigma * std::sqrt(t);
    const long double d1 = std::log(s / x) / v + 0.5L * v;
    return s * norm_cdf(d1) - x * norm_cdf(d1 - v);
}

/// chi(1) = 1/2 - exp(alpha^2/2)*N(-alpha) in long double.
inline long double chi_one(long double alpha) {
    return 0.5L - std::exp(0.5L * alpha * alpha) * norm_cdf(-alpha);
}

struct Coefficients {
    long double c1, c2, c3;
};

/// The tangency coefficients evaluated straight from their closed forms.
inline Coefficients coefficients(long double alpha) {
    const long double chi1 = chi_one(alpha);
    const long double chip1 = alpha / std::sqrt(2.0L * kPi);
    const long double k = 1.0L - 2.0L * chi1;
    const long double g = chi1 * (1.0L - chi1);
    const long double c2 = k * chip1 * chip1 / (4.0L * g * g);
    const long double c1 = chip1 * (2.0L * g - k * chip1) / (4.0L * g * g);
    const long double c3 = std::atanh(2.0L * chi1 - 1.0L) + chip1 * (k * chip1 - g) / (2.0L * g * g);
    return {c1, c2, c3};
}

}  // namespace oracle
