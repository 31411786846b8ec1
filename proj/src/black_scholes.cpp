#include "tanhvol/black_scholes.hpp"

#include "tanhvol/errors.hpp"
#include "tanhvol/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tanhvol {

void validate(const OptionTerms& terms) {
    if (!(terms.spot > 0.0) || !std::isfinite(terms.spot))
        throw invalid_input("option terms: spot must be positive");
    if (!(terms.strike > 0.0) || !std::isfinite(terms.strike))
        throw invalid_input("option terms: strike must be positive");
    if (!(terms.maturity > 0.0) || !std::isfinite(terms.maturity))
        throw invalid_input("option terms: maturity must be positive");
    if (!std::isfinite(terms.rate)) throw invalid_input("option terms: rate must be finite");
}

void validate(const NormalizedTerms& terms) {
    if (!(terms.spot > 0.0) || !std::isfinite(terms.spot))
        throw invalid_input("normalized terms: spot must be positive");
    if (!(terms.discounted_strike > 0.0) || !std::isfinite(terms.discounted_strike))
        throw invalid_input("normalized terms: discounted strike must be positive");
    if (!(terms.maturity > 0.0) || !std::isfinite(terms.maturity))
        throw invalid_input("normalized terms: maturity must be positive");
}

void validate(const CallQuote& quote) {
    validate(quote.terms);
    const double lo = intrinsic_value(quote.terms);
    if (!std::isfinite(quote.price) || !(quote.price > lo) || !(quote.price < quote.terms.spot))
        throw bound_violation("bound violation: call price outside (max(S-X,0), S)");
}

double intrinsic_value(const NormalizedTerms& terms) {
    return std::max(terms.spot - terms.discounted_strike, 0.0);
}

NormalizedTerms normalize(const OptionTerms& terms) {
    validate(terms);
    return {terms.spot, terms.strike * std::exp(-terms.rate * terms.maturity), terms.maturity};
}

double bs_call(const NormalizedTerms& terms, double sigma) {
    validate(terms);
    if (!(sigma > 0.0) || !std::isfinite(sigma)) throw invalid_input("bs_call: sigma must be positive");

    const double s = terms.spot;
    const double x = terms.discounted_strike;
    const double v = sigma * std::sqrt(terms.maturity);
    const double m = std::log(s / x);
    const double d1 = m / v + 0.5 * v;
    const double d2 = d1 - v;

    if (m > 0.0) {
        // In the money: price = intrinsic + time value. The time value is
        // positive in exact arithmetic; a negative rounding residue is
        // clipped so the price never dips below the payoff.
        const double time_value = x * norm_cdf(-d2) - s * norm_cdf(-d1);
        return (s - x) + std::max(time_value, 0.0);
    }
    return std::max(s * norm_cdf(d1) - x * norm_cdf(d2), 0.0);
}

double bs_vega(const NormalizedTerms& terms, double sigma) {
    validate(terms);
    if (!(sigma > 0.0) || !std::isfinite(sigma)) throw invalid_input("bs_vega: sigma must be positive");

    const double sqrt_t = std::sqrt(terms.maturity);
    const double v = sigma * sqrt_t;
    const double d1 = std::log(terms.spot / terms.discounted_strike) / v + 0.5 * v;
    return terms.spot * sqrt_t * norm_pdf(d1);
}

double iv_oracle(const CallQuote& quote) {
    validate(quote);

    const double s = quote.terms.spot;
    const double c = quote.price;
    const double tol = 1e-13 * s;

    double lo = 1e-8;
    double hi = 20.0;
    const double f_lo = bs_call(quote.terms, lo) - c;
    if (f_lo >= 0.0) return lo;  // implied volatility below the bracket floor

    // Brenner-Subrahmanyam seed, clamped into the bracket.
    double sigma = std::clamp(std::sqrt(2.0 * M_PI / quote.terms.maturity) * c / s, lo, hi);

    for (int iter = 0; iter < 200; ++iter) {
        const double f = bs_call(quote.terms, sigma) - c;
        if (std::fabs(f) <= tol) return sigma;

        if (f > 0.0)
            hi = sigma;
        else
            lo = sigma;

        double next = sigma;
        const double vega = bs_vega(quote.terms, sigma);
        if (vega > 0.0) next = sigma - f / vega;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);  // Newton left the bracket
        if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * sigma) return sigma;
        sigma = next;
    }
    throw no_convergence("iv_oracle: no convergence after 200 iterations");
}

}  // namespace tanhvol
