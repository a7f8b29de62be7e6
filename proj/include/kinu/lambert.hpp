#pragma once

namespace kinu {

/// Outcome of a principal-branch Lambert W solve.
struct WResult {
    double w;
    int iterations;
    double residual; // |w e^w - z| / max(z, 1)
};

/// Principal branch W(z) for z >= 0 by Halley iteration; residual <= 1e-14.
WResult w_principal(double z);

/// Partial sums of the large-z expansion of W in L1 = log z, L2 = log log z.
/// terms in 1..6; requires z > e so that L2 > 0.
double w_asymptotic(double z, int terms);

/// Partial sums of the matching large-z expansion of 1/W; terms in 1..5.
double inv_w_asymptotic(double z, int terms);

} // namespace kinu
