#pragma once

#include "tanhvol/black_scholes.hpp"
#include "tanhvol/tanh_surrogate.hpp"

namespace tanhvol {

/// Which formula produced an estimate.
enum class Method {
    TanhGeneral,
    Atm0,
    Atm1,
    Atm2,
    OracleNewton,
    BrennerSubrahmanyam,
    CorradoMiller,
    Li,
};

const char* method_name(Method m);

struct VolEstimate {
    double sigma_hat;
    Method method;
};

/// Lambda = (1/2)*log((C - max(S-X,0))/(S - C)), the log-odds of the
/// normalized price; strictly increasing in C. Throws bound_violation
/// outside the open arbitrage interval.
double lambda_of(const CallQuote& quote);

/// Closed-form inverse of call_hat for S != X: the unique positive root of
/// the quadratic c1*x^2 - (Lambda-c3)*x - c2 = 0, scaled back to
/// sigma = alpha*x/sqrt(T).
VolEstimate implied_vol_tanh(const CallQuote& quote);

/// Closed-form inverses of the three ATM surrogates. Theta0 inverts the
/// plain tanh; Theta1 and Theta2 reduce to depressed cubics solved by the
/// Cardano root. Accepts C = 0 as the exact zero-volatility boundary;
/// throws bound_violation for C < 0 or C >= S.
VolEstimate atm_implied_vol(AtmKind kind, double spot, double maturity, double price);

/// Dispatcher: ATM branch (with the preferred kind) when |log(S/X)| is
/// below the ATM threshold, the general tanh inverse otherwise.
VolEstimate implied_vol(const CallQuote& quote, AtmKind preference = AtmKind::Theta2);

}  // namespace tanhvol
