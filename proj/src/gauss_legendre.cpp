#include "gauss_legendre.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <utility>

namespace kinu::detail {

namespace {

// Legendre P_n and its derivative at x via the three-term recurrence.
void legendre(int n, const BigFloat& x, BigFloat& p, BigFloat& dp) {
    BigFloat p0 = 1, p1 = x;
    for (int k = 2; k <= n; ++k) {
        BigFloat p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = std::move(p1);
        p1 = std::move(p2);
    }
    p = p1;
    dp = n * (x * p1 - p0) / (x * x - 1);
}

GLRule compute_rule(int n) {
    GLRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    BigFloat tol = pow(BigFloat(10), -static_cast<int>(BigFloat::default_precision()));
    for (int i = 1; 2 * i <= n + 1; ++i) {
        // Chebyshev-like first guess, then Newton; the quadratic convergence
        // reaches full working precision in a handful of steps.
        BigFloat x(std::cos(M_PI * (i - 0.25) / (n + 0.5)));
        BigFloat p, dp;
        for (int iter = 0; iter < 200; ++iter) {
            legendre(n, x, p, dp);
            BigFloat dx = p / dp;
            x -= dx;
            if (abs(dx) <= tol) break;
        }
        legendre(n, x, p, dp);
        BigFloat w = 2 / ((1 - x * x) * dp * dp);
        rule.nodes[i - 1] = -x; // roots come out descending; store ascending
        rule.weights[i - 1] = w;
        rule.nodes[n - i] = x;
        rule.weights[n - i] = w;
    }
    return rule;
}

} // namespace

const GLRule& gauss_legendre(int n) {
    static std::map<std::pair<int, unsigned>, GLRule> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(n, BigFloat::default_precision());
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, compute_rule(n)).first;
    return it->second;
}

} // namespace kinu::detail
