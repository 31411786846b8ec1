#pragma once

namespace tanhvol {

/// Raw market inputs of a European call.
struct OptionTerms {
    double spot;      ///< S > 0
    double strike;    ///< K > 0
    double rate;      ///< continuously compounded, per year
    double maturity;  ///< T > 0, in years
};

/// (S, X, T) with X = K*exp(-r*T) the discounted strike; the canonical
/// input to every pricing and inversion formula in this library.
struct NormalizedTerms {
    double spot;
    double discounted_strike;
    double maturity;
};

/// A call price C attached to its normalized terms. Valid quotes sit
/// strictly inside the arbitrage interval (max(S-X,0), S).
struct CallQuote {
    NormalizedTerms terms;
    double price;
};

/// Throws invalid_input unless S, K, T are positive and finite.
void validate(const OptionTerms& terms);

/// Throws invalid_input unless S, X, T are positive and finite.
void validate(const NormalizedTerms& terms);

/// Throws bound_violation unless max(S-X,0) < C < S.
void validate(const CallQuote& quote);

/// max(S - X, 0), the payoff floor of the call price.
double intrinsic_value(const NormalizedTerms& terms);

/// Discounts the strike: X = K*exp(-r*T).
NormalizedTerms normalize(const OptionTerms& terms);

/// Black-Scholes call price S*N(d1) - X*N(d2),
/// d1 = log(S/X)/(sigma*sqrt(T)) + sigma*sqrt(T)/2, d2 = d1 - sigma*sqrt(T).
double bs_call(const NormalizedTerms& terms, double sigma);

/// dC/dsigma = S*sqrt(T)*n(d1), always positive.
double bs_vega(const NormalizedTerms& terms, double sigma);

/// Ground-truth implied volatility: safeguarded Newton (vega steps,
/// bisection fallback) bracketed on [1e-8, 20], seeded with the
/// Brenner-Subrahmanyam estimate. Terminates when
/// |bs_call(sigma) - C| <= 1e-13*S; throws no_convergence after 200
/// iterations and bound_violation outside the arbitrage interval.
double iv_oracle(const CallQuote& quote);

}  // namespace tanhvol
