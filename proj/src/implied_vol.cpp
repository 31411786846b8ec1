#include "tanhvol/implied_vol.hpp"

#include "tanhvol/cubic.hpp"
#include "tanhvol/errors.hpp"
#include "tanhvol/standardized_call.hpp"

#include <cmath>

namespace tanhvol {

const char* method_name(Method m) {
    switch (m) {
        case Method::TanhGeneral: return "tanh-general";
        case Method::Atm0: return "atm-theta0";
        case Method::Atm1: return "atm-theta1";
        case Method::Atm2: return "atm-theta2";
        case Method::OracleNewton: return "oracle-newton";
        case Method::BrennerSubrahmanyam: return "brenner-subrahmanyam";
        case Method::CorradoMiller: return "corrado-miller";
        case Method::Li: return "li";
    }
    return "unknown";
}

double lambda_of(const CallQuote& quote) {
    validate(quote);
    const double payoff = intrinsic_value(quote.terms);
    return 0.5 * std::log((quote.price - payoff) / (quote.terms.spot - quote.price));
}

VolEstimate implied_vol_tanh(const CallQuote& quote) {
    const double alpha = alpha_of(quote.terms);  // throws atm_degenerate in the band
    const SurrogateCoefficients co = coefficients(alpha);
    const double lambda = lambda_of(quote);

    const double t = lambda - co.c3;
    const double disc = std::sqrt(t * t + 4.0 * co.c1 * co.c2);
    // Pick the cancellation-free writing of the positive quadratic root.
    const double x = t >= 0.0 ? (t + disc) / (2.0 * co.c1) : 2.0 * co.c2 / (disc - t);

    return {alpha * x / std::sqrt(quote.terms.maturity), Method::TanhGeneral};
}

VolEstimate atm_implied_vol(AtmKind kind, double spot, double maturity, double price) {
    if (!(spot > 0.0) || !(maturity > 0.0))
        throw invalid_input("atm_implied_vol: spot and maturity must be positive");
    if (!(price >= 0.0) || !(price < spot))
        throw bound_violation("bound violation: atm call price outside [0, S)");

    const double log_odds = std::log((spot + price) / (spot - price));

    switch (kind) {
        case AtmKind::Theta0:
            return {std::sqrt(0.5 * M_PI / maturity) * log_odds, Method::Atm0};
        case AtmKind::Theta1: {
            const double p = 4.0 / (4.0 - M_PI);
            const double q = 3.0 / (4.0 - M_PI) * log_odds;
            const double y = cardano_unique_real_root({p, q});
            return {std::sqrt(2.0 * M_PI / maturity) * y, Method::Atm1};
        }
        case AtmKind::Theta2: {
            const double p = kTheta2A / (3.0 * kTheta2B);
            const double q = log_odds / (4.0 * kTheta2B);
            const double w = cardano_unique_real_root({p, q});
            return {std::sqrt(8.0 / maturity) * w, Method::Atm2};
        }
    }
    throw invalid_input("atm_implied_vol: unknown kind");
}

VolEstimate implied_vol(const CallQuote& quote, AtmKind preference) {
    validate(quote);
    const double log_moneyness =
        std::log(quote.terms.spot / quote.terms.discounted_strike);
    if (std::fabs(log_moneyness) < kAtmLogThreshold)
        return atm_implied_vol(preference, quote.terms.spot, quote.terms.maturity, quote.price);
    return implied_vol_tanh(quote);
}

}  // namespace tanhvol
