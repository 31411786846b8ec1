#include "tanhvol/cubic.hpp"

#include "tanhvol/errors.hpp"

#include <cmath>

namespace tanhvol {

double cardano_unique_real_root(const DepressedCubic& c) {
    if (!(c.p > 0.0)) throw domain_error("cardano: p must be positive");
    const double p = c.p;
    const double q = std::fabs(c.q);
    if (q == 0.0) return 0.0;

    const double s = std::sqrt(p * p * p + q * q);
    // u = cbrt(s+q) has no cancellation; the conjugate identity gives
    // cbrt(s-q) = cbrt(p^3/(s+q)) = p/u.
    const double u = std::cbrt(s + q);
    double x = u - p / u;

    // One Newton step sharpens the root to a residual of a few ulps.
    const double f = (x * x * x + 3.0 * p * x) - 2.0 * q;
    x -= f / (3.0 * (x * x + p));

    return std::copysign(x, c.q);
}

}  // namespace tanhvol
