#pragma once

#include <string>
#include <vector>

namespace kinu {

/// Full dossier of one zero: inputs, base solution, estimate, refined value,
/// and the audit quantities derived from them.
struct ZeroRecord {
    int n = 0;
    double x = 0;
    double m = 0;              // (n + 3/4) pi
    double lambda = 0;         // 2/(e x)
    double xi = 0;             // base approximation
    double chi = 0;            // xi / m
    double estimate = 0;       // order-3 asymptotic estimate
    double refined = 0;        // root of the scaled function
    double est_minus_refined = 0;
    double residual_24 = 0;    // defect of the estimate in the zero equation
    double f_at_refined = 0;
    std::string error;         // nonempty when this row failed (build_table)
};

/// Base approximation xi = m / W(lambda m), the exact solution of
/// xi log(lambda xi) = m with m = (n + 3/4) pi and lambda = 2/(e x).
/// n is wide so the log-scale comparisons can reach n ~ 10^12.
double xi_base(long long n, double x);

/// Partial sums of the log-log expansion of xi (terms in 1..3); converges
/// only on log scales, kept for documentation and comparison.
double xi_loglog(long long n, double x, int terms);

/// Asymptotic zero estimate: order 0 gives xi, orders 1..3 add B_0/m,
/// B_1/m^3, B_2/m^5.
double estimate_zero(long long n, double x, int order);

/// Refined zero: seeds at the order-3 estimate, brackets by a quarter of the
/// local zero spacing (widened at most twice), bisects to 1e-3, then polishes
/// with a Brent step to tol.  tol must be >= 1e-12 (double-precision path).
double refine_zero(int n, double x, double tol = 1e-10);

/// Leading-order law pi n / log n; needs n >= 2.
double leading_order(long long n);

/// One ZeroRecord per requested n; row failures are recorded in the row's
/// error field and do not abort the remaining rows.
std::vector<ZeroRecord> build_table(const std::vector<int>& n_list, double x,
                                    double tol = 1e-10);

/// Diagnostic sign-scan of the scaled function on (x, below): returns every
/// zero found, refined to ~1e-9.  Exists to probe for zeros under nu_1.
std::vector<double> scan_zeros_below(double x, double below, int samples = 256);

/// Phase correction eps(nu) from the derived series, truncated at 1/nu^5.
double phase_epsilon(double nu, double x);

/// Defect |nu log(lambda nu) - m - A_0/nu - A_1/nu^3 - A_2/nu^5| of a
/// candidate nu in the zero equation.
double zero_equation_defect(double nu, double x, double m);

} // namespace kinu
