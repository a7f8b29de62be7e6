#pragma once

#include <string>

#include "kinu/bigfloat.hpp"

namespace kinu {

/// Precision and truncation policy for the quadrature ground truth.
struct EvalConfig {
    int requested_digits = 10; // target correct significant digits of f
    int max_panels = 65536;
    int nodes_per_panel = 16;
};

/// One evaluation of the scaled function f(nu) = e^{pi nu/2} K_{i nu}(x).
struct ScaledEval {
    BigFloat value;
    double est_error;   // difference of the last two refinements (or the
                        // last-retained-term scale for the asymptotic method)
    int working_digits;
    std::string method; // "quadrature" or "asymptotic"

    double to_double() const { return static_cast<double>(value); }
};

/// Ground truth by extended-precision quadrature of
/// integral_0^T e^{-x cosh t} cos(nu t) dt, rescaled by e^{pi nu/2}.
///
/// The working precision grows linearly with nu to absorb the cancellation
/// down to the e^{-pi nu/2} scale of the unscaled function; the truncation
/// point T puts the tail five digits below the working precision; panel
/// counts double until two successive refinements agree to requested_digits.
ScaledEval eval_scaled(double nu, double x, const EvalConfig& cfg = {});

/// Same quantity through the full-line form
/// (1/2) integral_{-T}^{T} e^{-x cosh t} cos(nu t) dt, without exploiting
/// the integrand's parity; exists as an independent cross-check.
ScaledEval eval_scaled_fullline(double nu, double x, const EvalConfig& cfg = {});

/// Cheap double-precision evaluation by the large-nu saddle expansion,
/// truncated at C_kmax.  Refuses nu < x + 1/2, where the expansion parameter
/// is no longer small.
ScaledEval eval_scaled_asymptotic(double nu, double x, int kmax = 5);

/// Saddle geometry: mu = arccosh(nu/x), tanh mu, and the phase
/// Phi = nu (mu - tanh mu) - pi/4.
struct PhaseInfo {
    double mu;
    double tanh_mu;
    double Phi;
};

PhaseInfo phase_mu(double nu, double x);

} // namespace kinu
