#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "kinu/rational.hpp"

namespace kinu {

// Polynomial in one formal parameter with exact rational coefficients.
// The parameter's meaning is contextual (s = coth(mu) in saddle work,
// u = x^2 in the zero equation).  Trailing zero coefficients are trimmed;
// the zero polynomial has degree -1.
class ParamPoly {
public:
    ParamPoly() = default;
    ParamPoly(Rational constant);                       // NOLINT: implicit by design
    ParamPoly(long long constant) : ParamPoly(Rational(constant)) {}
    ParamPoly(std::initializer_list<Rational> coeffs);  // ascending powers
    explicit ParamPoly(std::vector<Rational> coeffs);

    static ParamPoly monomial(Rational coeff, std::size_t power);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    // Coefficient of the given power (zero beyond the degree).
    const Rational& coeff(std::size_t power) const;

    double eval(double param) const;

    friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    ParamPoly operator-() const;
    friend ParamPoly operator*(const ParamPoly& a, const Rational& s);
    friend ParamPoly operator*(const Rational& s, const ParamPoly& a) { return a * s; }
    ParamPoly& operator+=(const ParamPoly& b) { return *this = *this + b; }
    ParamPoly& operator-=(const ParamPoly& b) { return *this = *this - b; }

    friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

    // "3/128 - 77/576*s^2 + 385/3456*s^4"
    std::string str(const std::string& param = "s") const;

private:
    void trim();
    std::vector<Rational> c_;
};

} // namespace kinu
