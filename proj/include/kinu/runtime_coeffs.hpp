#pragma once

#include <array>

namespace kinu {

/// Floating-point coefficients of the zero expansion at one (n, x) point.
struct RuntimeCoeffs {
    double xi;      // base approximation, xi log(lambda xi) = m
    double m;       // (n + 3/4) pi
    double chi;     // xi / m
    double logterm; // 1 + log(lambda xi), equal to (1 + chi)/chi by the base equation
    std::array<double, 3> c; // c_0..c_2 of the xi-power solution
    std::array<double, 3> B; // B_0..B_2 of the inverse-power form
};

/// Evaluates c_0..c_2 and B_0..B_2 at u = x^2 from the exact A-table.
///
/// xi must already solve xi log(lambda xi) = m; the identity
/// 1 + log(lambda xi) = (1 + chi)/chi is checked to 1e-13 relative and a
/// violation throws ConsistencyError.
RuntimeCoeffs eval_runtime_coeffs(double xi, double m, double x);

} // namespace kinu
