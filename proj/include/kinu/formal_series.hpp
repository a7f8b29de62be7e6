#pragma once

#include <string>
#include <vector>

#include "kinu/param_poly.hpp"

namespace kinu {

/// Truncated formal power series over ParamPoly, exact in every coefficient.
///
/// A series of order N carries the powers u^0 .. u^{N-1} of its variable;
/// binary operations truncate to the smaller operand order.  The variable
/// is identified by a free-form role tag ("delta", "tau", "1/nu", "r^2", ...)
/// and arithmetic between series with different tags is rejected.
/// Values are immutable; every operation returns a fresh series.
class FormalSeries {
public:
    FormalSeries(std::vector<ParamPoly> coeffs, std::string var);

    static FormalSeries zero(std::size_t order, std::string var);
    static FormalSeries constant(std::size_t order, Rational value, std::string var);
    static FormalSeries identity(std::size_t order, std::string var); // the series "u"

    enum class Kind { sqrt1p, log1p, atan, geom };
    /// Template series sqrt(1+u), log(1+u), arctan(u), 1/(1-u).
    static FormalSeries elementary(Kind kind, std::size_t order, std::string var = "u");

    std::size_t order() const { return c_.size(); }
    const std::string& var() const { return var_; }
    const ParamPoly& coeff(std::size_t k) const;
    bool is_zero() const;

    friend FormalSeries operator+(const FormalSeries& a, const FormalSeries& b);
    friend FormalSeries operator-(const FormalSeries& a, const FormalSeries& b);
    friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b);
    /// Power-series division; the divisor's constant term must be a nonzero
    /// scalar (a degree-0 ParamPoly), otherwise NonInvertibleSeries.
    friend FormalSeries operator/(const FormalSeries& a, const FormalSeries& b);

    friend bool operator==(const FormalSeries& a, const FormalSeries& b);
    friend bool operator!=(const FormalSeries& a, const FormalSeries& b) { return !(a == b); }

    std::string str(const std::string& param = "s") const;

private:
    void check_same_var(const FormalSeries& other) const;

    std::vector<ParamPoly> c_;
    std::string var_;
};

/// outer(inner(u)); requires inner(0) = 0.  The result lives in inner's variable.
FormalSeries compose(const FormalSeries& outer, const FormalSeries& inner);

/// Compositional inverse: given f with f(0) = 0 and f'(0) a nonzero scalar,
/// returns g (in variable `var`) with f(g(u)) = u to truncation order.
FormalSeries revert(const FormalSeries& f, std::string var);
inline FormalSeries revert(const FormalSeries& f) { return revert(f, f.var()); }

/// Term-by-term derivative; the order drops by one (an order-1 input yields
/// the order-1 zero series).
FormalSeries differentiate(const FormalSeries& f);

/// f(u) * u, truncated to f's order.
FormalSeries shift_up(const FormalSeries& f);

} // namespace kinu
