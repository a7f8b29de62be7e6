#include "kinu/coeff_tables.hpp"

#include <stdexcept>
#include <string>

#include "kinu/errors.hpp"

namespace kinu {

namespace {

BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt double_factorial(int n) {
    BigInt r = 1;
    for (; n > 1; n -= 2) r *= n;
    return r;
}

// 1/(1 - rho) to the derivation order.
FormalSeries geom_rho() {
    return FormalSeries::elementary(FormalSeries::Kind::geom, kDerivationOrder, "r^2");
}

// (1 - rho)^{-1/2} = 1 / sqrt1p(-rho).
FormalSeries inv_sqrt_one_minus_rho() {
    std::vector<ParamPoly> neg(kDerivationOrder);
    neg[1] = ParamPoly(Rational(-1));
    FormalSeries neg_rho(std::move(neg), "r^2");
    FormalSeries sq = compose(
        FormalSeries::elementary(FormalSeries::Kind::sqrt1p, kDerivationOrder), neg_rho);
    return FormalSeries::constant(kDerivationOrder, Rational(1), "r^2") / sq;
}

// alpha(s) * tanh^{-(2j+1)}(mu) rewritten as a series in rho = r^2, using
// s^2 = 1/(1-rho) and tanh mu = sqrt(1-rho).  alpha must be even in s.
FormalSeries expand_in_rho(const ParamPoly& alpha, int j) {
    FormalSeries G = geom_rho();
    FormalSeries acc = FormalSeries::zero(kDerivationOrder, "r^2");
    FormalSeries Gi = FormalSeries::constant(kDerivationOrder, Rational(1), "r^2");
    for (int i = 0; 2 * i <= alpha.degree(); ++i) {
        const Rational& beta = alpha.coeff(2 * static_cast<std::size_t>(i));
        if (!beta.is_zero())
            acc = acc + FormalSeries::constant(kDerivationOrder, beta, "r^2") * Gi;
        Gi = Gi * G;
    }
    for (int t = 0; t < j; ++t) acc = acc * G;
    return acc * inv_sqrt_one_minus_rho();
}

} // namespace

std::vector<ParamPoly> derive_saddle_coeffs(int kmax) {
    if (kmax < 0 || 2 * static_cast<std::size_t>(kmax) + 1 >= kDerivationOrder)
        throw std::invalid_argument("kmax " + std::to_string(kmax) +
                                    " exceeds the derivation truncation budget");

    std::vector<ParamPoly> hc(kDerivationOrder);
    hc[0] = ParamPoly(Rational(1));
    for (std::size_t k = 1; k < kDerivationOrder; ++k) {
        Rational c(BigInt(2), factorial(static_cast<int>(k) + 2));
        hc[k] = ParamPoly::monomial(std::move(c), k % 2);
    }
    FormalSeries h(std::move(hc), "delta");

    FormalSeries sqrt_h = compose(
        FormalSeries::elementary(FormalSeries::Kind::sqrt1p, kDerivationOrder),
        h - FormalSeries::constant(kDerivationOrder, Rational(1), "delta"));
    FormalSeries tau = shift_up(sqrt_h);
    FormalSeries d = revert(tau, "tau");

    std::vector<ParamPoly> C(static_cast<std::size_t>(kmax) + 1);
    for (int k = 0; k <= kmax; ++k)
        C[static_cast<std::size_t>(k)] =
            d.coeff(2 * static_cast<std::size_t>(k) + 1) * Rational(2 * k + 1);
    return C;
}

PhaseCorrection derive_phase_correction(int kmax) {
    std::vector<ParamPoly> C = derive_saddle_coeffs(kmax);

    // Split of (1/2)_k C_k / (i T/2)^k over k parity, T = nu tanh mu:
    // the i^{-k} factor lands the even terms (weight (2k-1)!!, sign (-1)^{k/2})
    // in the cosine sum E and the odd ones in the sine sum O.
    std::vector<ParamPoly> Ec(kDerivationOrder), Oc(kDerivationOrder);
    for (std::size_t k = 0; k < C.size() && k < kDerivationOrder; ++k) {
        Rational w(double_factorial(2 * static_cast<int>(k) - 1));
        if ((k / 2) % 2 == 1) w = -w;
        (k % 2 == 0 ? Ec : Oc)[k] = C[k] * w;
    }
    FormalSeries E(std::move(Ec), "v");
    FormalSeries O(std::move(Oc), "v");
    FormalSeries eps_v = compose(
        FormalSeries::elementary(FormalSeries::Kind::atan, kDerivationOrder), O / E);

    std::vector<FormalSeries> a;
    a.reserve(3);
    for (int j = 0; j < 3; ++j)
        a.push_back(expand_in_rho(eps_v.coeff(2 * static_cast<std::size_t>(j) + 1), j));

    // Collect eps = sum_j a_j(rho) / (nu tanh mu ... ) as plain inverse powers
    // of nu: rho^i contributes u^i at 1/nu^{2i}, so a_j feeds 1/nu^{2i+2j+1}.
    std::vector<ParamPoly> ec(kDerivationOrder);
    for (std::size_t j = 0; j < a.size(); ++j) {
        for (std::size_t i = 0; i < kDerivationOrder; ++i) {
            const ParamPoly& p = a[j].coeff(i);
            if (p.is_zero()) continue;
            std::size_t pw = 2 * i + 2 * j + 1;
            if (pw >= kDerivationOrder) break;
            ec[pw] += ParamPoly::monomial(p.coeff(0), i);
        }
    }
    FormalSeries eps_nu(std::move(ec), "1/nu");

    return PhaseCorrection{std::move(eps_v), std::move(a), std::move(eps_nu)};
}

FormalSeries derive_mu_expansion(std::size_t order) {
    if (order < 1) throw std::invalid_argument("mu expansion order must be >= 1");
    // arccosh(1/r) = log(2/r) - sum_{j>=1} (2j-1)!!/((2j)!! 2j) r^{2j}
    std::vector<ParamPoly> mc(order);
    for (std::size_t j = 1; j < order; ++j) {
        int n = static_cast<int>(j);
        mc[j] = ParamPoly(-Rational(double_factorial(2 * n - 1),
                                    double_factorial(2 * n) * (2 * n)));
    }
    FormalSeries M(std::move(mc), "r^2");

    std::vector<ParamPoly> neg(order);
    if (order > 1) neg[1] = ParamPoly(Rational(-1));
    FormalSeries tanh_mu = compose(
        FormalSeries::elementary(FormalSeries::Kind::sqrt1p, order), FormalSeries(std::move(neg), "r^2"));

    // mu - tanh mu - log(2/(e r)) = [log(2/r) + M] - tanh mu - log(2/r) + 1
    return M - tanh_mu + FormalSeries::constant(order, Rational(1), "r^2");
}

std::vector<ParamPoly> derive_A() {
    PhaseCorrection pc = derive_phase_correction(5);
    FormalSeries mu = derive_mu_expansion();

    // nu(mu - tanh mu) = nu log(lambda nu) + sum_k mu_{k+1} u^{k+1} nu^{-(2k+1)},
    // so the zero condition nu(mu - tanh mu) + eps = m + pi/4 + n pi becomes
    // nu log(lambda nu) = m + sum_k A_k nu^{-(2k+1)} with
    // A_k = eps_{2k+1}(u) - mu_{k+1} u^{k+1}.
    std::vector<ParamPoly> A(3);
    for (std::size_t k = 0; k < 3; ++k) {
        A[k] = pc.eps_series.coeff(2 * k + 1) -
               ParamPoly::monomial(mu.coeff(k + 1).coeff(0), k + 1);
    }

    // Tripwire against the known closed forms; the derived values are what
    // the library uses, the literals only detect a derivation defect.
    const std::vector<ParamPoly> expected = {
        ParamPoly{Rational(1, 12), Rational(-1, 4)},
        ParamPoly{Rational(1, 360), Rational(1, 4), Rational(-1, 32)},
        ParamPoly{Rational(1, 1260), Rational(-1, 4), Rational(11, 32), Rational(-1, 96)},
    };
    for (std::size_t k = 0; k < 3; ++k)
        if (A[k] != expected[k])
            throw ConsistencyError("derived A_" + std::to_string(k) +
                                   " = " + A[k].str("u") + " does not match its closed form");
    return A;
}

CoeffTables::CoeffTables()
    : C(derive_saddle_coeffs(5)),
      phase_eps(FormalSeries::zero(1, "v")),
      eps_series(FormalSeries::zero(1, "1/nu")),
      mu_minus_tanh(derive_mu_expansion()),
      A(derive_A()) {
    PhaseCorrection pc = derive_phase_correction(5);
    phase_eps = std::move(pc.phase_eps);
    a_expansions = std::move(pc.a_expansions);
    eps_series = std::move(pc.eps_series);
}

const CoeffTables& coeff_tables() {
    static const CoeffTables tables;
    return tables;
}

} // namespace kinu
