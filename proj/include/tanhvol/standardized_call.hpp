#pragma once

#include "tanhvol/black_scholes.hpp"

namespace tanhvol {

/// Below this bound on |log(S/X)| the standardized machinery is numerically
/// degenerate and callers must switch to the ATM branch.
inline constexpr double kAtmLogThreshold = 1e-6;

/// alpha = sqrt(2*|log(S/X)|) > 0, the single parameter indexing the
/// standardized call family. Throws atm_degenerate inside the ATM band.
double alpha_of(const NormalizedTerms& terms);

/// Standardized call function
///   chi_alpha(x) = N(alpha/2*(x-1/x)) - exp(alpha^2/2)*N(-alpha/2*(x+1/x)),
/// strictly increasing from 0 to 1 on x > 0.
double chi(double alpha, double x);

/// chi'_alpha(x) = alpha/sqrt(2*pi) * exp(-alpha^2/8*(x-1/x)^2) > 0.
double chi_prime(double alpha, double x);

/// chi''_alpha(x) = alpha^3/(4*sqrt(2*pi)) * exp(-alpha^2/8*(x-1/x)^2)
///                  * (1-x^4)/x^3; positive on (0,1), zero at 1, negative
/// beyond.
double chi_second(double alpha, double x);

/// Reduction of the market call to the standardized family:
///   C(sigma) = S*chi_alpha(sigma*sqrt(T)/alpha)          if X > S,
///   C(sigma) = S - X + X*chi_alpha(sigma*sqrt(T)/alpha)  if X < S.
/// Agrees with bs_call up to roundoff. Throws atm_degenerate when S = X.
double call_from_chi(const NormalizedTerms& terms, double sigma);

}  // namespace tanhvol
