#pragma once

#include <cstddef>
#include <vector>

#include "kinu/formal_series.hpp"
#include "kinu/param_poly.hpp"

namespace kinu {

/// Everything derive_phase_correction produces in one pass.
struct PhaseCorrection {
    /// eps(v), v = 1/(nu tanh mu); odd powers only, coefficients in s = coth mu.
    FormalSeries phase_eps;
    /// a_0, a_1, a_2 as series in r^2 (r = x/nu) with scalar coefficients.
    std::vector<FormalSeries> a_expansions;
    /// eps as a series in 1/nu whose coefficients are polynomials in u = x^2.
    FormalSeries eps_series;
};

/// The full exact coefficient suite, derived once and shared read-only.
struct CoeffTables {
    std::vector<ParamPoly> C;               // saddle coefficients, in s = coth mu
    FormalSeries phase_eps;                 // eps(v)
    std::vector<FormalSeries> a_expansions; // a_0..a_2 in r^2
    FormalSeries eps_series;                // eps in 1/nu, coefficients in u
    FormalSeries mu_minus_tanh;             // mu - tanh mu - log(2/(e r)) in r^2
    std::vector<ParamPoly> A;               // A_0..A_2, in u = x^2

    CoeffTables();
};

/// Number of series terms carried through the derivations; two guard orders
/// beyond what C_5 needs.
inline constexpr std::size_t kDerivationOrder = 14;

/// Saddle coefficients C_0..C_kmax as polynomials in s = coth mu.
///
/// The saddle at t_0 = mu + i pi/2 turns the phase into a series whose k-th
/// Taylor coefficient carries i*cosh(mu) for odd k and i*sinh(mu) for even k.
/// Dividing out the common i*sinh(mu) leaves h(delta) = 1 + sum_{k>=1}
/// 2/(k+2)! * p_k * delta^k with p_k = s for odd k and 1 for even k, which is
/// real, so the whole derivation stays in rational arithmetic.  Setting
/// tau = delta*sqrt(h), reverting to delta(tau) = sum d_j tau^j, the odd-index
/// extraction C_k = (2k+1) d_{2k+1} gives the expansion coefficients.
std::vector<ParamPoly> derive_saddle_coeffs(int kmax = 5);

/// Phase correction eps from the C table: tan(eps) as the ratio of the odd
/// and even half-sums with weights (1/2)_k 2^k = (2k-1)!! and signs (-1)^{k/2}
/// (from i^{-k}), arctan composed on top, then re-expanded in r^2 and 1/nu.
PhaseCorrection derive_phase_correction(int kmax = 5);

/// mu - tanh(mu) - log(2/(e r)) as a series in r^2, from the arccosh(1/r)
/// log-expansion and tanh mu = sqrt(1 - r^2).
FormalSeries derive_mu_expansion(std::size_t order = kDerivationOrder);

/// Zero-equation coefficients A_0..A_2 as polynomials in u = x^2, combining
/// the eps series with the mu expansion order by order in 1/nu.  The result
/// is checked against the known closed forms; a mismatch throws
/// ConsistencyError (a derivation defect, never silently accepted).
std::vector<ParamPoly> derive_A();

/// The shared table suite; derived on first use, immutable afterwards.
const CoeffTables& coeff_tables();

} // namespace kinu
