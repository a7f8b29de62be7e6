#include <doctest.h>

#include <cmath>
#include <vector>

#include "kinu/errors.hpp"
#include "kinu/lambert.hpp"

using namespace kinu;

namespace {

double rel_err(double approx, double exact) { return std::fabs(approx - exact) / std::fabs(exact); }

const double kE = std::exp(1.0);

} // namespace

TEST_CASE("principal branch converges tightly across fourteen decades") {
    const std::vector<double> grid = {1e-3, 0.1, 1.0, kE, 10.0, 1e2,
                                      1e4,  1e6, 1e8, 1e10, 1e12};
    for (double z : grid) {
        WResult r = w_principal(z);
        CHECK(r.iterations <= 10);
        CHECK(r.residual <= 1e-14);
        // the defining equation, re-checked here independently of the solver
        CHECK(r.w * std::exp(r.w) == doctest::Approx(z).epsilon(1e-13));
    }
}

TEST_CASE("principal branch reproduces reference values") {
    auto check = [](double z, double expected) {
        CHECK(w_principal(z).w == doctest::Approx(expected).epsilon(5e-15));
    };
    check(1e-3, 0.0009990014973385313);
    check(0.1, 0.09127652716086226);
    check(1.0, 0.567143290409784); // the omega constant
    check(10.0, 1.7455280027406994);
    check(1e2, 3.38563014029005);
    check(1e4, 7.231846038093373);
    check(1e6, 11.383358086140053);
    check(1e8, 15.668996715450962);
    check(1e10, 20.028685413304952);
    check(1e12, 24.43500440493491);
    CHECK(w_principal(0.0).w == 0.0);
    CHECK(w_principal(kE).w == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("principal branch is strictly monotone") {
    double prev = w_principal(0.0).w;
    for (double z = 0.25; z <= 64.0; z += 0.25) {
        double w = w_principal(z).w;
        CHECK(w > prev);
        prev = w;
    }
}

TEST_CASE("domain guards") {
    CHECK_THROWS_AS(w_principal(-0.1), DomainError);
    CHECK_THROWS_AS(w_asymptotic(kE, 3), DomainError);
    CHECK_THROWS_AS(w_asymptotic(1.0, 3), DomainError);
    CHECK_THROWS_AS(w_asymptotic(10.0, 0), DomainError);
    CHECK_THROWS_AS(w_asymptotic(10.0, 7), DomainError);
    CHECK_THROWS_AS(inv_w_asymptotic(kE, 2), DomainError);
    CHECK_THROWS_AS(inv_w_asymptotic(10.0, 6), DomainError);
}

TEST_CASE("series error at z = 1e3 shrinks through five terms") {
    const double z = 1e3;
    const double exact = w_principal(z).w;
    std::vector<double> err;
    for (int t = 1; t <= 6; ++t) err.push_back(rel_err(w_asymptotic(z, t), exact));
    for (int t = 1; t < 5; ++t) CHECK(err[t] < err[t - 1]);
    // the sixth term is past the optimal truncation point this low in z, so
    // only the coarse ordering against the two-term sum is stable
    CHECK(err[5] < err[1]);
}

TEST_CASE("six terms beat three for large z") {
    for (double z : {1e6, 1e8, 1e10, 1e12}) {
        const double exact = w_principal(z).w;
        CHECK(rel_err(w_asymptotic(z, 6), exact) < rel_err(w_asymptotic(z, 3), exact));
    }
}

TEST_CASE("six-term sum is already sub-permille at z = 1e8") {
    const double z = 1e8;
    CHECK(rel_err(w_asymptotic(z, 6), w_principal(z).w) < 1e-3);
}

TEST_CASE("inverse expansion starts at 1/log z and sharpens") {
    const double z = 1e6;
    CHECK(inv_w_asymptotic(z, 1) == doctest::Approx(1.0 / std::log(z)).epsilon(1e-15));
    const double exact = 1.0 / w_principal(z).w;
    CHECK(rel_err(inv_w_asymptotic(z, 5), exact) < rel_err(inv_w_asymptotic(z, 1), exact));
    CHECK(rel_err(inv_w_asymptotic(1e8, 5), 1.0 / w_principal(1e8).w) < 1e-3);
}

TEST_CASE("direct and inverse expansions agree with each other") {
    const double z = 1e10;
    const double product = w_asymptotic(z, 6) * inv_w_asymptotic(z, 5);
    CHECK(std::fabs(product - 1.0) < 5e-4);
}
