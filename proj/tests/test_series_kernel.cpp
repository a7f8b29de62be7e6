#include <doctest.h>

#include <random>
#include <vector>

#include "kinu/errors.hpp"
#include "kinu/formal_series.hpp"

using namespace kinu;

namespace {

FormalSeries from_ints(std::vector<long long> coeffs, std::string var = "u") {
    std::vector<ParamPoly> c(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = ParamPoly(Rational(coeffs[i]));
    return FormalSeries(std::move(c), std::move(var));
}

FormalSeries one_plus_u(std::size_t order) {
    return FormalSeries::constant(order, Rational(1), "u") + FormalSeries::identity(order, "u");
}

} // namespace

TEST_CASE("rational arithmetic stays canonical") {
    Rational a(6, -4);
    CHECK(a == Rational(-3, 2));
    CHECK(a.denominator() == 2);
    CHECK((a + Rational(3, 2)).is_zero());
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(1, 7).to_double() == doctest::Approx(1.0 / 7.0).epsilon(1e-15));
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("param poly ring basics") {
    ParamPoly p({Rational(1), Rational(0), Rational(-2)}); // 1 - 2 s^2
    CHECK(p.degree() == 2);
    CHECK(p.coeff(1).is_zero());
    CHECK(p.eval(2.0) == doctest::Approx(-7.0));
    CHECK((p - p).is_zero());
    CHECK(ParamPoly().degree() == -1);
    CHECK(p.str() == "1 - 2*s^2");

    ParamPoly a({Rational(1), Rational(1)}), b({Rational(2), Rational(-1)});
    ParamPoly c({Rational(0), Rational(3)});
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
}

TEST_CASE("series arithmetic") {
    FormalSeries u = FormalSeries::identity(6, "u");
    FormalSeries one = FormalSeries::constant(6, Rational(1), "u");

    CHECK((one + u) * (one - u) == from_ints({1, 0, -1, 0, 0, 0}));
    CHECK(one / (one - u) == from_ints({1, 1, 1, 1, 1, 1}));

    // parameter-carrying square: (1 + s u)^2 = 1 + 2 s u + s^2 u^2
    std::vector<ParamPoly> sc(4);
    sc[0] = ParamPoly(Rational(1));
    sc[1] = ParamPoly::monomial(Rational(1), 1);
    FormalSeries susq = FormalSeries(sc, "u") * FormalSeries(sc, "u");
    CHECK(susq.coeff(1) == ParamPoly::monomial(Rational(2), 1));
    CHECK(susq.coeff(2) == ParamPoly::monomial(Rational(1), 2));

    CHECK_THROWS_AS(one / u, NonInvertibleSeries);
    CHECK_THROWS_AS(u + FormalSeries::identity(6, "w"), std::invalid_argument);
}

TEST_CASE("division round-trips against multiplication") {
    FormalSeries a = from_ints({3, -1, 4, 1, -5, 9, 2, 6});
    FormalSeries b = from_ints({2, 7, -1, 8, 2, -8, 1, 8});
    CHECK((a / b) * b == a);
}

TEST_CASE("composition") {
    FormalSeries g = from_ints({0, 1, 0, 1, 0, 0}); // u + u^3
    FormalSeries atan = FormalSeries::elementary(FormalSeries::Kind::atan, 6);
    FormalSeries r = compose(atan, g);
    CHECK(r.coeff(1) == ParamPoly(Rational(1)));
    CHECK(r.coeff(3) == ParamPoly(Rational(2, 3))); // 1 - 1/3

    CHECK(compose(FormalSeries::identity(6, "t"), g) == g);

    // log(1+.) and exp(.)-1 cancel
    std::vector<ParamPoly> ec(8);
    Rational f(1);
    for (std::size_t k = 1; k < 8; ++k) {
        f = f / Rational(static_cast<long long>(k));
        ec[k] = ParamPoly(f);
    }
    FormalSeries expm1(ec, "u");
    FormalSeries log1p = FormalSeries::elementary(FormalSeries::Kind::log1p, 8);
    CHECK(compose(log1p, expm1) == FormalSeries::identity(8, "u"));

    CHECK_THROWS_AS(compose(atan, one_plus_u(6)), std::invalid_argument);
}

TEST_CASE("reversion") {
    CHECK(revert(FormalSeries::identity(6, "u")) == FormalSeries::identity(6, "u"));

    // f = u + u^2 inverts to alternating Catalan numbers
    FormalSeries f = from_ints({0, 1, 1, 0, 0, 0});
    FormalSeries g = revert(f);
    CHECK(g.coeff(2) == ParamPoly(Rational(-1)));
    CHECK(g.coeff(3) == ParamPoly(Rational(2)));
    CHECK(g.coeff(4) == ParamPoly(Rational(-5)));
    CHECK(g.coeff(5) == ParamPoly(Rational(14)));
    CHECK(compose(f, g) == FormalSeries::identity(6, "u"));
    CHECK(compose(g, f) == FormalSeries::identity(6, "u"));

    // sine series inverts to the arcsine series
    std::vector<ParamPoly> sc(6);
    sc[1] = ParamPoly(Rational(1));
    sc[3] = ParamPoly(Rational(-1, 6));
    sc[5] = ParamPoly(Rational(1, 120));
    FormalSeries asin = revert(FormalSeries(sc, "u"));
    CHECK(asin.coeff(3) == ParamPoly(Rational(1, 6)));
    CHECK(asin.coeff(5) == ParamPoly(Rational(3, 40)));

    CHECK_THROWS_AS(revert(one_plus_u(6)), std::invalid_argument);
    CHECK_THROWS_AS(revert(from_ints({0, 0, 1, 0})), std::invalid_argument);
}

TEST_CASE("elementary templates") {
    FormalSeries s = FormalSeries::elementary(FormalSeries::Kind::sqrt1p, 4);
    CHECK(s == FormalSeries({ParamPoly(Rational(1)), ParamPoly(Rational(1, 2)),
                             ParamPoly(Rational(-1, 8)), ParamPoly(Rational(1, 16))},
                            "u"));

    FormalSeries a = FormalSeries::elementary(FormalSeries::Kind::atan, 6);
    CHECK(a.coeff(1) == ParamPoly(Rational(1)));
    CHECK(a.coeff(2).is_zero());
    CHECK(a.coeff(3) == ParamPoly(Rational(-1, 3)));
    CHECK(a.coeff(5) == ParamPoly(Rational(1, 5)));

    CHECK(FormalSeries::elementary(FormalSeries::Kind::geom, 3) == from_ints({1, 1, 1}));

    FormalSeries s8 = FormalSeries::elementary(FormalSeries::Kind::sqrt1p, 8);
    CHECK(s8 * s8 == one_plus_u(8));
}

TEST_CASE("differentiation") {
    CHECK(differentiate(from_ints({1, 1, 1})) == from_ints({1, 2}));
    CHECK(differentiate(FormalSeries::constant(4, Rational(7), "u")).is_zero());

    // chain rule: d/du revert(f) = 1 / f'(revert(f))
    FormalSeries f = from_ints({0, 1, 1, 0, 0, 0, 0});
    FormalSeries g = revert(f);
    FormalSeries lhs = differentiate(g);
    FormalSeries fprime = differentiate(f);
    std::vector<ParamPoly> gc(6);
    for (std::size_t i = 0; i < 6; ++i) gc[i] = g.coeff(i);
    FormalSeries rhs = FormalSeries::constant(6, Rational(1), "u") /
                       compose(fprime, FormalSeries(gc, "u"));
    CHECK(lhs == rhs);
}

TEST_CASE("compose after revert is the identity on random series") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> order(5, 9);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = static_cast<std::size_t>(order(rng));
        std::vector<ParamPoly> c(n);
        c[1] = ParamPoly(Rational(1));
        for (std::size_t k = 2; k < n; ++k) c[k] = ParamPoly(Rational(coeff(rng)));
        FormalSeries f(c, "u");
        FormalSeries g = revert(f);
        CHECK(compose(f, g) == FormalSeries::identity(n, "u"));
    }
}

TEST_CASE("multiplication is associative on random parameter-carrying series") {
    std::mt19937 rng(7071);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> deg(0, 2);
    auto random_series = [&]() {
        std::vector<ParamPoly> c(7);
        for (auto& p : c) {
            std::vector<Rational> pc(static_cast<std::size_t>(deg(rng)) + 1);
            for (auto& q : pc) q = Rational(coeff(rng));
            p = ParamPoly(std::move(pc));
        }
        return FormalSeries(std::move(c), "u");
    };
    for (int trial = 0; trial < 50; ++trial) {
        FormalSeries a = random_series(), b = random_series(), c = random_series();
        CHECK((a * b) * c == a * (b * c));
    }
}
