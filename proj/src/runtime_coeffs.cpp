#include "kinu/runtime_coeffs.hpp"

#include <cmath>
#include <string>

#include "kinu/coeff_tables.hpp"
#include "kinu/errors.hpp"

namespace kinu {

RuntimeCoeffs eval_runtime_coeffs(double xi, double m, double x) {
    if (!(xi > 0.0) || !(m > 0.0) || !(x > 0.0))
        throw DomainError("eval_runtime_coeffs needs xi > 0, m > 0, x > 0");

    double lambda = 2.0 / (std::exp(1.0) * x);
    double logterm = 1.0 + std::log(lambda * xi);
    double chi = xi / m;
    double via_chi = (1.0 + chi) / chi;
    if (std::abs(logterm - via_chi) > 1e-13 * std::max(std::abs(logterm), std::abs(via_chi)))
        throw ConsistencyError("xi = " + std::to_string(xi) +
                               " does not solve xi log(lambda xi) = m to working precision");

    const CoeffTables& t = coeff_tables();
    double u = x * x;
    double A0 = t.A[0].eval(u);
    double A1 = t.A[1].eval(u);
    double A2 = t.A[2].eval(u);

    RuntimeCoeffs rc;
    rc.xi = xi;
    rc.m = m;
    rc.chi = chi;
    rc.logterm = logterm;

    double c0 = A0 / logterm;
    double num1 = A1 - A0 * c0 - 0.5 * c0 * c0;
    double c1 = num1 / logterm;
    double num2 = A2 - 3.0 * A1 * c0 + A0 * (c0 * c0 - c1) - c0 * c1 + c0 * c0 * c0 / 6.0;
    double c2 = num2 / logterm;
    rc.c = {c0, c1, c2};

    double chi2 = chi * chi;
    rc.B = {A0 / (1.0 + chi), num1 / (chi2 * (1.0 + chi)),
            num2 / (chi2 * chi2 * (1.0 + chi))};
    return rc;
}

} // namespace kinu
