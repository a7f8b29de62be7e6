#include "kinu/macdonald.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gauss_legendre.hpp"
#include "kinu/coeff_tables.hpp"
#include "kinu/errors.hpp"

namespace kinu {

namespace {

// Decimal digits needed so the e^{-pi nu/2} cancellation still leaves
// requested_digits correct ones; pi/(2 ln 10) = 0.6822.
int working_digits_for(double nu, int requested_digits) {
    return static_cast<int>(std::ceil(0.6822 * nu)) + requested_digits + 10;
}

// Truncation point: x cosh T > (P + 5) ln 10, so the dropped tail sits five
// digits below the working precision.
double truncation_point(double x, int digits) {
    double arg = std::max((digits + 5) * std::log(10.0) / x + 0.5, 2.0);
    return std::log(arg + std::sqrt(arg * arg - 1.0));
}

// integral_a^b e^{-x cosh t} cos(nu t) dt over `panels` equal panels.
BigFloat integrate(const BigFloat& nu, const BigFloat& x, const BigFloat& a,
                   const BigFloat& b, int panels, int nodes) {
    const detail::GLRule& rule = detail::gauss_legendre(nodes);
    BigFloat sum = 0;
    BigFloat width = (b - a) / panels;
    BigFloat half = width / 2;
    for (int p = 0; p < panels; ++p) {
        BigFloat mid = a + width * p + half;
        BigFloat local = 0;
        for (int i = 0; i < nodes; ++i) {
            BigFloat t = mid + half * rule.nodes[i];
            local += rule.weights[i] * exp(-x * cosh(t)) * cos(nu * t);
        }
        sum += local * half;
    }
    return sum;
}

ScaledEval eval_by_quadrature(double nu, double x, const EvalConfig& cfg, bool full_line) {
    if (!(x > 0)) throw DomainError("eval_scaled requires x > 0");
    if (!(nu >= 0)) throw DomainError("eval_scaled requires nu >= 0");
    if (cfg.requested_digits < 1) throw DomainError("requested_digits must be >= 1");

    int digits = working_digits_for(nu, cfg.requested_digits);
    PrecisionGuard guard(static_cast<unsigned>(digits));

    BigFloat bnu(nu), bx(x);
    double T = truncation_point(x, digits);
    BigFloat a = full_line ? BigFloat(-T) : BigFloat(0);
    BigFloat b(T);

    // Base panel count from the oscillation budget, then doubled until two
    // successive values agree to the requested digits.
    double span = full_line ? 2 * T : T;
    double max_len = std::min(1.0, M_PI / (4.0 * std::max(nu, 1.0)));
    int panels = std::max(1, static_cast<int>(std::ceil(span / max_len)));

    BigFloat pi = boost::math::constants::pi<BigFloat>();
    BigFloat scale = exp(pi * bnu / 2);
    if (full_line) scale /= 2;

    BigFloat tol = pow(BigFloat(10), -cfg.requested_digits);
    BigFloat prev = scale * integrate(bnu, bx, a, b, panels, cfg.nodes_per_panel);
    while (true) {
        if (2 * panels > cfg.max_panels)
            throw AccuracyError("quadrature did not converge within " +
                                    std::to_string(cfg.max_panels) + " panels at nu = " +
                                    std::to_string(nu),
                                static_cast<double>(prev),
                                std::numeric_limits<double>::infinity());
        panels *= 2;
        BigFloat cur = scale * integrate(bnu, bx, a, b, panels, cfg.nodes_per_panel);
        BigFloat diff = abs(cur - prev);
        if (diff <= tol * std::max(BigFloat(abs(cur)), BigFloat(1))) {
            return ScaledEval{cur, static_cast<double>(diff), digits,
                              "quadrature"};
        }
        prev = std::move(cur);
    }
}

} // namespace

ScaledEval eval_scaled(double nu, double x, const EvalConfig& cfg) {
    return eval_by_quadrature(nu, x, cfg, false);
}

ScaledEval eval_scaled_fullline(double nu, double x, const EvalConfig& cfg) {
    return eval_by_quadrature(nu, x, cfg, true);
}

PhaseInfo phase_mu(double nu, double x) {
    if (!(x > 0)) throw DomainError("phase_mu requires x > 0");
    if (!(nu > x)) throw DomainError("phase_mu requires nu > x");
    double q = nu / x;
    double mu = std::log(q + std::sqrt(q * q - 1.0));
    double tanh_mu = std::sqrt((1.0 - x / nu) * (1.0 + x / nu));
    double Phi = nu * (mu - tanh_mu) - M_PI / 4.0;
    return {mu, tanh_mu, Phi};
}

ScaledEval eval_scaled_asymptotic(double nu, double x, int kmax) {
    if (!(x > 0)) throw DomainError("eval_scaled_asymptotic requires x > 0");
    if (!(nu >= x + 0.5))
        throw DomainError("eval_scaled_asymptotic requires nu >= x + 1/2; the saddle "
                          "expansion degenerates as nu approaches x");
    const CoeffTables& tables = coeff_tables();
    if (kmax < 0 || static_cast<std::size_t>(kmax) >= tables.C.size())
        throw DomainError("kmax must lie in 0..5");

    PhaseInfo ph = phase_mu(nu, x);
    double T = nu * ph.tanh_mu;
    double s = 1.0 / ph.tanh_mu;

    // cos sum: 1 - 3 C_2/T^2 + 105 C_4/T^4; sin sum: C_1/T - 15 C_3/T^3 + ...
    // (weights (2k-1)!!, signs (-1)^{k/2} from the i^{-k} factor).
    double even = 0.0, odd = 0.0, last_even = 0.0, last_odd = 0.0;
    double weight = 1.0, Tpow = 1.0;
    for (int k = 0; k <= kmax; ++k) {
        if (k > 0) weight *= 2 * k - 1;
        double term = weight * tables.C[static_cast<std::size_t>(k)].eval(s) / Tpow;
        if ((k / 2) % 2 == 1) term = -term;
        if (k % 2 == 0) {
            even += term;
            last_even = term;
        } else {
            odd += term;
            last_odd = term;
        }
        Tpow *= T;
    }

    double prefactor = std::sqrt(2.0 * M_PI / T);
    double value = prefactor * (std::cos(ph.Phi) * even + std::sin(ph.Phi) * odd);
    // Truncation estimate: an asymptotic tail is of the order of its last
    // retained term.
    double est = prefactor * (std::abs(last_even) + std::abs(last_odd));
    if (kmax == 0) est = prefactor / T;
    return ScaledEval{BigFloat(value), est, 16, "asymptotic"};
}

} // namespace kinu
