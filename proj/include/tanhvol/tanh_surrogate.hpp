#pragma once

#include "tanhvol/black_scholes.hpp"

namespace tanhvol {

/// Coefficients of phi_alpha(x) = c1*x - c2/x + c3, the argument of the
/// tanh surrogate. c1 > 0 and c2 > 0 for every alpha > 0.
struct SurrogateCoefficients {
    double c1;
    double c2;
    double c3;
    double alpha;  ///< the generating parameter
};

/// The three ATM surrogate flavors: Theta0 = tanh(2z/sqrt(pi)),
/// Theta1 adds the cubic term matching erf's third-order Taylor expansion,
/// Theta2 = tanh(a*z + b*z^3) with numerically optimized constants.
enum class AtmKind { Theta0, Theta1, Theta2 };

inline constexpr double kTheta2A = 1.129324;
inline constexpr double kTheta2B = 0.100303;

/// Solves the tangency conditions chi_hat(1) = chi(1),
/// chi_hat'(1) = chi'(1), chi_hat''(1) = 0 for (c1, c2, c3).
/// Throws conditioning_error when chi(1) < 1e-12 (alpha too small; use the
/// ATM branch).
SurrogateCoefficients coefficients(double alpha);

/// phi(x) = c1*x - c2/x + c3; strictly increasing, -inf at 0+, +inf at inf.
double phi(const SurrogateCoefficients& co, double x);

/// chi_hat_alpha(x) = (1 + tanh(phi_alpha(x)))/2.
double chi_hat(const SurrogateCoefficients& co, double x);

/// Convenience overload; coefficients are memoized per thread keyed on the
/// bit pattern of alpha, with results identical to a fresh computation.
double chi_hat(double alpha, double x);

/// Surrogate call price: S*chi_hat(sigma*sqrt(T)/alpha) for X > S, else
/// S - X + X*chi_hat(...). Throws atm_degenerate inside the ATM band.
double call_hat(const NormalizedTerms& terms, double sigma);

/// Exact ATM (S = X) call price, C(sigma) = S*erf(sigma*sqrt(T/8)).
double atm_call_exact(double spot, double maturity, double sigma);

/// The erf surrogates Theta0/Theta1/Theta2 evaluated at z.
double theta(AtmKind kind, double z);

/// ATM surrogate call price S*Theta_k(sigma*sqrt(T/8)).
double atm_call_hat(AtmKind kind, double spot, double maturity, double sigma);

}  // namespace tanhvol
