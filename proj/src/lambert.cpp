#include "kinu/lambert.hpp"

#include <cmath>
#include <string>

#include "kinu/errors.hpp"

namespace kinu {

WResult w_principal(double z) {
    if (z < 0.0) throw DomainError("w_principal requires z >= 0");
    if (z == 0.0) return {0.0, 0, 0.0};

    double w;
    if (z <= std::exp(1.0)) {
        w = std::log1p(z);
    } else {
        double L1 = std::log(z), L2 = std::log(L1);
        w = L1 - L2 + L2 / L1;
    }

    double scale = std::max(z, 1.0);
    int it = 0;
    for (; it < 50; ++it) {
        double ew = std::exp(w);
        double f = w * ew - z;
        if (std::abs(f) <= 1e-15 * scale) break;
        // Halley step: f' = (w+1)e^w, f'' = (w+2)e^w
        double denom = ew * (w + 1.0) - f * (w + 2.0) / (2.0 * (w + 1.0));
        double step = f / denom;
        w -= step;
        if (std::abs(step) <= 1e-15 * std::abs(w)) {
            ++it;
            break;
        }
    }
    double residual = std::abs(w * std::exp(w) - z) / scale;
    if (residual > 1e-14)
        throw AccuracyError("w_principal failed to converge at z = " + std::to_string(z), w,
                            residual);
    return {w, it, residual};
}

double w_asymptotic(double z, int terms) {
    if (!(z > std::exp(1.0))) throw DomainError("w_asymptotic requires z > e");
    if (terms < 1 || terms > 6)
        throw DomainError("w_asymptotic supports 1..6 terms");
    double L1 = std::log(z), L2 = std::log(L1);
    double t[6] = {
        L1,
        -L2,
        L2 / L1,
        L2 * (L2 - 2.0) / (2.0 * L1 * L1),
        L2 * (6.0 - 9.0 * L2 + 2.0 * L2 * L2) / (6.0 * L1 * L1 * L1),
        L2 * (-12.0 + 36.0 * L2 - 22.0 * L2 * L2 + 3.0 * L2 * L2 * L2) /
            (12.0 * L1 * L1 * L1 * L1),
    };
    double s = 0.0;
    for (int i = 0; i < terms; ++i) s += t[i];
    return s;
}

double inv_w_asymptotic(double z, int terms) {
    if (!(z > std::exp(1.0))) throw DomainError("inv_w_asymptotic requires z > e");
    if (terms < 1 || terms > 5)
        throw DomainError("inv_w_asymptotic supports 1..5 terms");
    double L1 = std::log(z), L2 = std::log(L1);
    double t[5] = {
        1.0,
        L2 / L1,
        L2 * (L2 - 1.0) / (L1 * L1),
        L2 * (1.0 - 5.0 * L2 + 2.0 * L2 * L2) / (2.0 * L1 * L1 * L1),
        L2 * (-6.0 + 21.0 * L2 - 26.0 * L2 * L2 + 6.0 * L2 * L2 * L2) /
            (6.0 * L1 * L1 * L1 * L1),
    };
    double s = 0.0;
    for (int i = 0; i < terms; ++i) s += t[i];
    return s / L1;
}

} // namespace kinu
