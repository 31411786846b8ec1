#pragma once

namespace tanhvol {

/// Parameters of the depressed cubic x^3 + 3*p*x = 2*q.
/// p > 0 guarantees the left side is strictly increasing, hence a unique
/// real root.
struct DepressedCubic {
    double p;
    double q;
};

/// Unique real root of x^3 + 3*p*x = 2*q, p > 0:
///   x = cbrt(sqrt(p^3+q^2)+q) - cbrt(sqrt(p^3+q^2)-q).
/// The smaller cube-root operand is rewritten as p^3/(sqrt(p^3+q^2)+|q|)
/// so no digits are lost when |q| dwarfs p^3. Throws domain_error if p <= 0.
double cardano_unique_real_root(const DepressedCubic& c);

}  // namespace tanhvol
