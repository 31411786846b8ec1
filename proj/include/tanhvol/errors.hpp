#pragma once

#include <stdexcept>
#include <string>

namespace tanhvol {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Nonpositive spot/strike/maturity, sigma <= 0, and similar bad inputs.
struct invalid_input : error {
    using error::error;
};

/// Argument outside the mathematical domain of a scalar function.
struct domain_error : error {
    using error::error;
};

/// Quote price outside the open arbitrage interval (max(S-X,0), S).
struct bound_violation : error {
    using error::error;
};

/// Spot and discounted strike too close; the standardized machinery is
/// degenerate and the ATM branch must be used instead.
struct atm_degenerate : error {
    using error::error;
};

/// Surrogate coefficient denominators too close to underflow.
struct conditioning_error : error {
    using error::error;
};

/// Iterative solver exhausted its iteration budget.
struct no_convergence : error {
    using error::error;
};

/// Malformed harness configuration (empty interval, bad sample count, ...).
struct config_error : error {
    using error::error;
};

}  // namespace tanhvol
