#include "kinu/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "kinu/coeff_tables.hpp"
#include "kinu/errors.hpp"
#include "kinu/lambert.hpp"
#include "kinu/macdonald.hpp"
#include "kinu/runtime_coeffs.hpp"

namespace kinu {

namespace {

constexpr int kSignDigits = 6; // evaluation digits for bracketing queries

double m_of(long long n) { return (static_cast<double>(n) + 0.75) * M_PI; }

double lambda_of(double x) { return 2.0 / (std::exp(1.0) * x); }

void check_nx(long long n, double x) {
    if (n < 1) throw DomainError("zero index n must be >= 1");
    if (!(x > 0)) throw DomainError("x must be positive");
}

double f_eval(double nu, double x, int digits) {
    EvalConfig cfg;
    cfg.requested_digits = digits;
    return eval_scaled(nu, x, cfg).to_double();
}

// Brent root polish on [a, b] with f(a), f(b) of opposite sign; stops when
// the bracket is within tol of the root.
double brent(const std::function<double(double)>& f, double a, double b, double fa,
             double fb, double tol) {
    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int iter = 0; iter < 100; ++iter) {
        if ((fb > 0) == (fc > 0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        double tol1 = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * tol;
        double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0) return b;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            // inverse quadratic / secant step
            double s = fb / fa, p, q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                double r = fb / fc;
                double t = fa / fc;
                p = s * (2.0 * xm * t * (t - r) - (b - a) * (r - 1.0));
                q = (t - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += std::abs(d) > tol1 ? d : (xm > 0 ? tol1 : -tol1);
        fb = f(b);
    }
    return b;
}

} // namespace

double xi_base(long long n, double x) {
    check_nx(n, x);
    double m = m_of(n);
    double lambda = lambda_of(x);
    double xi = m / w_principal(lambda * m).w;
    if (std::abs(xi * std::log(lambda * xi) - m) > 1e-13 * m)
        throw ConsistencyError("xi does not satisfy its defining equation at n = " +
                               std::to_string(n));
    return xi;
}

double xi_loglog(long long n, double x, int terms) {
    check_nx(n, x);
    double z = lambda_of(x) * m_of(n);
    if (terms < 1 || terms > 3) throw DomainError("xi_loglog supports 1..3 terms");
    return m_of(n) * inv_w_asymptotic(z, terms);
}

double estimate_zero(long long n, double x, int order) {
    check_nx(n, x);
    if (order < 0 || order > 3) throw DomainError("estimate order must lie in 0..3");
    double m = m_of(n);
    double xi = xi_base(n, x);
    if (order == 0) return xi;
    RuntimeCoeffs rc = eval_runtime_coeffs(xi, m, x);
    double nu = xi;
    double mpow = m;
    for (int k = 0; k < order; ++k) {
        nu += rc.B[static_cast<std::size_t>(k)] / mpow;
        mpow *= m * m;
    }
    return nu;
}

double refine_zero(int n, double x, double tol) {
    check_nx(n, x);
    if (!(tol >= 1e-12))
        throw DomainError("refine_zero tolerance floor is 1e-12 on the double path");

    double seed = estimate_zero(n, x, 3);
    double xi = xi_base(n, x);
    double lambda = lambda_of(x);
    // Quarter of the local zero spacing d nu = pi / log(lambda xi).
    double delta = M_PI / (4.0 * std::log(lambda * xi));

    double lo = 0, hi = 0, flo = 0, fhi = 0;
    bool bracketed = false;
    for (int attempt = 0; attempt < 3 && !bracketed; ++attempt, delta *= 2) {
        lo = std::max(seed - delta, 0.0);
        hi = seed + delta;
        flo = f_eval(lo, x, kSignDigits);
        fhi = f_eval(hi, x, kSignDigits);
        bracketed = (flo > 0) != (fhi > 0);
    }
    if (!bracketed)
        throw BracketingError("no sign change around the order-3 estimate " +
                              std::to_string(seed) + " for n = " + std::to_string(n) +
                              ", x = " + std::to_string(x) + " (final half-width " +
                              std::to_string(delta / 2) + ")");

    while (hi - lo > 1e-3) {
        double mid = 0.5 * (lo + hi);
        double fmid = f_eval(mid, x, kSignDigits);
        if ((fmid > 0) == (flo > 0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
            fhi = fmid;
        }
    }

    int polish_digits = static_cast<int>(std::ceil(-std::log10(tol))) + 4;
    auto f = [&](double nu) { return f_eval(nu, x, polish_digits); };
    return brent(f, lo, hi, f(lo), f(hi), tol);
}

double leading_order(long long n) {
    if (n < 2) throw DomainError("leading_order needs n >= 2");
    return M_PI * static_cast<double>(n) / std::log(static_cast<double>(n));
}

double phase_epsilon(double nu, double x) {
    if (!(nu > 0)) throw DomainError("phase_epsilon requires nu > 0");
    const CoeffTables& t = coeff_tables();
    double u = x * x;
    double eps = 0.0;
    for (std::size_t p = 1; p <= 5; p += 2)
        eps += t.eps_series.coeff(p).eval(u) / std::pow(nu, static_cast<double>(p));
    return eps;
}

double zero_equation_defect(double nu, double x, double m) {
    const CoeffTables& t = coeff_tables();
    double u = x * x;
    double rhs = m;
    double npow = nu;
    for (std::size_t k = 0; k < 3; ++k) {
        rhs += t.A[k].eval(u) / npow;
        npow *= nu * nu;
    }
    return std::abs(nu * std::log(lambda_of(x) * nu) - rhs);
}

std::vector<ZeroRecord> build_table(const std::vector<int>& n_list, double x, double tol) {
    std::vector<ZeroRecord> rows;
    rows.reserve(n_list.size());
    for (int n : n_list) {
        ZeroRecord r;
        r.n = n;
        r.x = x;
        try {
            r.m = m_of(n);
            r.lambda = lambda_of(x);
            r.xi = xi_base(n, x);
            r.chi = r.xi / r.m;
            r.estimate = estimate_zero(n, x, 3);
            r.refined = refine_zero(n, x, tol);
            r.est_minus_refined = r.estimate - r.refined;
            r.residual_24 = zero_equation_defect(r.estimate, x, r.m);
            int digits = static_cast<int>(std::ceil(-std::log10(tol))) + 4;
            r.f_at_refined = f_eval(r.refined, x, digits);
        } catch (const std::exception& ex) {
            r.error = ex.what();
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<double> scan_zeros_below(double x, double below, int samples) {
    if (!(x > 0)) throw DomainError("x must be positive");
    if (samples < 8) throw DomainError("scan needs at least 8 samples");
    std::vector<double> found;
    if (!(below > x)) return found;

    double lo = x, hi = below;
    double step = (hi - lo) / samples;
    double prev_nu = lo;
    double prev_f = f_eval(prev_nu, x, kSignDigits);
    for (int i = 1; i <= samples; ++i) {
        double nu = lo + step * i;
        double fv = f_eval(nu, x, kSignDigits);
        if ((fv > 0) != (prev_f > 0)) {
            double a = prev_nu, b = nu, fa = prev_f;
            while (b - a > 1e-3) {
                double mid = 0.5 * (a + b);
                double fm = f_eval(mid, x, kSignDigits);
                if ((fm > 0) == (fa > 0)) {
                    a = mid;
                    fa = fm;
                } else {
                    b = mid;
                }
            }
            auto f = [&](double t) { return f_eval(t, x, 13); };
            found.push_back(brent(f, a, b, f(a), f(b), 1e-9));
        }
        prev_nu = nu;
        prev_f = fv;
    }
    return found;
}

} // namespace kinu
