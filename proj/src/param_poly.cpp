#include "kinu/param_poly.hpp"

#include <algorithm>

namespace kinu {

namespace {
const Rational kZero{};
}

ParamPoly::ParamPoly(Rational constant) {
    if (!constant.is_zero()) c_.push_back(std::move(constant));
}

ParamPoly::ParamPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

ParamPoly::ParamPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

ParamPoly ParamPoly::monomial(Rational coeff, std::size_t power) {
    if (coeff.is_zero()) return {};
    std::vector<Rational> c(power + 1);
    c[power] = std::move(coeff);
    return ParamPoly(std::move(c));
}

const Rational& ParamPoly::coeff(std::size_t power) const {
    return power < c_.size() ? c_[power] : kZero;
}

double ParamPoly::eval(double param) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * param + it->to_double();
    return acc;
}

void ParamPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return ParamPoly(std::move(r));
}

ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) { return a + (-b); }

ParamPoly ParamPoly::operator-() const {
    ParamPoly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return ParamPoly(std::move(r));
}

ParamPoly operator*(const ParamPoly& a, const Rational& s) {
    if (s.is_zero()) return {};
    ParamPoly r(a);
    for (auto& x : r.c_) x *= s;
    return r;
}

std::string ParamPoly::str(const std::string& param) const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        Rational v = c_[i];
        if (first) {
            if (v.sign() < 0) {
                out += "-";
                v = -v;
            }
        } else {
            out += v.sign() < 0 ? " - " : " + ";
            if (v.sign() < 0) v = -v;
        }
        first = false;
        out += v.str();
        if (i == 1)
            out += "*" + param;
        else if (i > 1)
            out += "*" + param + "^" + std::to_string(i);
    }
    return out;
}

} // namespace kinu
