#include "kinu/formal_series.hpp"

#include <algorithm>
#include <stdexcept>

#include "kinu/errors.hpp"

namespace kinu {

FormalSeries::FormalSeries(std::vector<ParamPoly> coeffs, std::string var)
    : c_(std::move(coeffs)), var_(std::move(var)) {
    if (c_.empty()) throw std::invalid_argument("series order must be >= 1");
}

FormalSeries FormalSeries::zero(std::size_t order, std::string var) {
    return FormalSeries(std::vector<ParamPoly>(order), std::move(var));
}

FormalSeries FormalSeries::constant(std::size_t order, Rational value, std::string var) {
    std::vector<ParamPoly> c(order);
    c[0] = ParamPoly(std::move(value));
    return FormalSeries(std::move(c), std::move(var));
}

FormalSeries FormalSeries::identity(std::size_t order, std::string var) {
    std::vector<ParamPoly> c(order);
    if (order < 2) throw std::invalid_argument("identity series needs order >= 2");
    c[1] = ParamPoly(Rational(1));
    return FormalSeries(std::move(c), std::move(var));
}

FormalSeries FormalSeries::elementary(Kind kind, std::size_t order, std::string var) {
    if (order < 1) throw std::invalid_argument("series order must be >= 1");
    std::vector<ParamPoly> c(order);
    switch (kind) {
        case Kind::sqrt1p: {
            // binomial series (1+u)^{1/2}
            Rational b(1);
            c[0] = ParamPoly(b);
            for (std::size_t k = 1; k < order; ++k) {
                b = b * (Rational(1, 2) - Rational(static_cast<long long>(k) - 1)) /
                    Rational(static_cast<long long>(k));
                c[k] = ParamPoly(b);
            }
            break;
        }
        case Kind::log1p:
            for (std::size_t k = 1; k < order; ++k)
                c[k] = ParamPoly(Rational(k % 2 == 1 ? 1 : -1, static_cast<long long>(k)));
            break;
        case Kind::atan:
            for (std::size_t k = 1; k < order; k += 2)
                c[k] = ParamPoly(Rational(((k - 1) / 2) % 2 == 0 ? 1 : -1,
                                          static_cast<long long>(k)));
            break;
        case Kind::geom:
            for (std::size_t k = 0; k < order; ++k) c[k] = ParamPoly(Rational(1));
            break;
    }
    return FormalSeries(std::move(c), std::move(var));
}

namespace {
const ParamPoly kZeroPoly{};
}

const ParamPoly& FormalSeries::coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : kZeroPoly;
}

bool FormalSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const ParamPoly& p) { return p.is_zero(); });
}

void FormalSeries::check_same_var(const FormalSeries& other) const {
    if (var_ != other.var_)
        throw std::invalid_argument("series variable mismatch: '" + var_ + "' vs '" +
                                    other.var_ + "'");
}

FormalSeries operator+(const FormalSeries& a, const FormalSeries& b) {
    a.check_same_var(b);
    std::size_t n = std::min(a.order(), b.order());
    std::vector<ParamPoly> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = a.c_[i] + b.c_[i];
    return FormalSeries(std::move(c), a.var_);
}

FormalSeries operator-(const FormalSeries& a, const FormalSeries& b) {
    a.check_same_var(b);
    std::size_t n = std::min(a.order(), b.order());
    std::vector<ParamPoly> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = a.c_[i] - b.c_[i];
    return FormalSeries(std::move(c), a.var_);
}

FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
    a.check_same_var(b);
    std::size_t n = std::min(a.order(), b.order());
    std::vector<ParamPoly> c(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            if (b.c_[j].is_zero()) continue;
            c[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return FormalSeries(std::move(c), a.var_);
}

FormalSeries operator/(const FormalSeries& a, const FormalSeries& b) {
    a.check_same_var(b);
    std::size_t n = std::min(a.order(), b.order());
    const ParamPoly& b0 = b.coeff(0);
    if (b0.is_zero() || !b0.is_constant())
        throw NonInvertibleSeries("series division needs a nonzero scalar constant term, got " +
                                  b0.str());
    Rational inv = Rational(1) / b0.coeff(0);
    std::vector<ParamPoly> q(n);
    for (std::size_t k = 0; k < n; ++k) {
        ParamPoly acc = a.coeff(k);
        for (std::size_t i = 1; i <= k; ++i) acc -= b.coeff(i) * q[k - i];
        q[k] = acc * inv;
    }
    return FormalSeries(std::move(q), a.var_);
}

bool operator==(const FormalSeries& a, const FormalSeries& b) {
    if (a.var_ != b.var_ || a.order() != b.order()) return false;
    return a.c_ == b.c_;
}

FormalSeries compose(const FormalSeries& outer, const FormalSeries& inner) {
    if (!inner.coeff(0).is_zero())
        throw std::invalid_argument("compose: inner series must have zero constant term");
    std::size_t n = std::min(outer.order(), inner.order());
    // Horner over series: r = (..(o_{n-1} * g + o_{n-2}) * g + ..) + o_0
    FormalSeries r = FormalSeries::zero(n, inner.var());
    std::vector<ParamPoly> gc(n);
    for (std::size_t i = 0; i < n; ++i) gc[i] = inner.coeff(i);
    FormalSeries g(std::move(gc), inner.var());
    for (std::size_t k = n; k-- > 0;) {
        r = r * g;
        std::vector<ParamPoly> add(n);
        add[0] = outer.coeff(k);
        r = r + FormalSeries(std::move(add), inner.var());
    }
    return r;
}

FormalSeries revert(const FormalSeries& f, std::string var) {
    std::size_t n = f.order();
    if (!f.coeff(0).is_zero())
        throw std::invalid_argument("revert: series must have zero constant term");
    const ParamPoly& f1 = f.coeff(1);
    if (f1.is_zero() || !f1.is_constant())
        throw std::invalid_argument("revert: linear coefficient must be a nonzero scalar, got " +
                                    f1.str());
    Rational inv = Rational(1) / f1.coeff(0);

    // Order-by-order substitution: with g known through u^{k-1}, the defect
    // of f(g(u)) at u^k is linear in the next coefficient, f'(0) * g_k.
    std::vector<ParamPoly> gc(n);
    gc[1] = ParamPoly(inv);
    std::vector<ParamPoly> fc(n);
    for (std::size_t i = 0; i < n; ++i) fc[i] = f.coeff(i);
    FormalSeries fn(std::move(fc), "w"); // composition ignores the tag pairing
    for (std::size_t k = 2; k < n; ++k) {
        FormalSeries g(gc, var);
        FormalSeries fog = compose(fn, g);
        gc[k] = -(fog.coeff(k) * inv);
    }
    return FormalSeries(std::move(gc), std::move(var));
}

FormalSeries differentiate(const FormalSeries& f) {
    std::size_t n = f.order() > 1 ? f.order() - 1 : 1;
    std::vector<ParamPoly> c(n);
    for (std::size_t k = 0; k + 1 < f.order(); ++k)
        c[k] = f.coeff(k + 1) * Rational(static_cast<long long>(k + 1));
    return FormalSeries(std::move(c), f.var());
}

FormalSeries shift_up(const FormalSeries& f) {
    std::vector<ParamPoly> c(f.order());
    for (std::size_t k = 1; k < f.order(); ++k) c[k] = f.coeff(k - 1);
    return FormalSeries(std::move(c), f.var());
}

std::string FormalSeries::str(const std::string& param) const {
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        if (!first) out += " + ";
        first = false;
        bool wrap = !c_[k].is_constant() || c_[k].coeff(0).sign() < 0;
        std::string term = c_[k].str(param);
        if (k > 0 && wrap) term = "(" + term + ")";
        out += term;
        if (k == 1)
            out += "*" + var_;
        else if (k > 1)
            out += "*" + var_ + "^" + std::to_string(k);
    }
    if (first) out = "0";
    return out + " + O(" + var_ + "^" + std::to_string(c_.size()) + ")";
}

} // namespace kinu
