#pragma once

#include "tanhvol/black_scholes.hpp"
#include "tanhvol/implied_vol.hpp"

#include <optional>

namespace tanhvol {

/// Closed-form implied-volatility formulas from the literature, used as
/// benchmarks. Transcriptions:
///
///  - Brenner & Subrahmanyam (1988), ATM first-order expansion:
///        sigma = sqrt(2*pi/T) * C/S.
///    Total on admissible quotes.
///
///  - Corrado & Miller (1996), quadratic expansion around the money:
///        sigma*sqrt(T) = sqrt(2*pi)/(S+X)
///                        * [ C - (S-X)/2 + sqrt((C-(S-X)/2)^2 - (S-X)^2/pi) ].
///    Unavailable when the radicand is negative (deep in/out of the money
///    with little time value).
///
///  - Li (2005), the moneyness-corrected variant of the same quadratic with
///    the fitted radicand constant 1.85:
///        sigma*sqrt(T) = sqrt(2*pi)/(S+X)
///                        * [ C - (S-X)/2 + sqrt((C-(S-X)/2)^2 - 1.85*(S-X)^2/pi) ].
///    Its stricter domain condition makes it unavailable on a superset of
///    the Corrado-Miller failures. An extension point for the rational
///    variant (Li 2008) is deliberately left open.
enum class ComparatorKind { BrennerSubrahmanyam, CorradoMiller, Li };

const char* comparator_name(ComparatorKind kind);

/// Evaluates the requested formula on a validated quote. Returns nullopt
/// ("unavailable") when the formula's domain condition fails; that outcome
/// is data, not an error. Throws bound_violation only for quotes outside
/// the arbitrage interval. Never returns NaN.
std::optional<VolEstimate> comparator_iv(ComparatorKind kind, const CallQuote& quote);

}  // namespace tanhvol
