#pragma once

// Double sequences of Bessel-type zeros: product representations of their
// Gamma functions, uniform expansions in the order, and coefficient ledgers.

#include <complex>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "conetorsion/error.hpp"
#include "conetorsion/rational.hpp"
#include "conetorsion/specfun.hpp"
#include "conetorsion/spectra.hpp"

namespace conetorsion {

struct ZeroSequenceSpec {
    ZeroKind kind = ZeroKind::J;
    OrderMap order_map{OrderKind::mu1, 1.0};
    Multiplicity multiplicity = Multiplicity::n_n_plus_2;
    double l = 1.0;
    int kappa = 2;
    int ell = 4;

    ZeroSequenceSpec() = default;
    ZeroSequenceSpec(ZeroKind k, OrderKind order, double nu, double length = 1.0)
        : kind(k),
          order_map{order, nu},
          multiplicity(BaseSequence(order, nu).multiplicity()),
          l(length),
          ell(decomposition_length(order)) {}

    double mu(long n) const {
        if (n < 1) throw domain_error("sequence index must be >= 1");
        return order_map(n);
    }
};

// ---------------------------------------------------------------- kind data

namespace detail {
// w in the prefactor log(1 + s w / mu) of the product representation, s = +-1.
inline std::pair<int, Rational> prefactor(ZeroKind kind) {
    switch (kind) {
        case ZeroKind::J:
        case ZeroKind::Jprime: return {0, 0};
        case ZeroKind::Tplus: return {1, 1};
        case ZeroKind::Tminus: return {-1, 1};
        case ZeroKind::Gplus: return {1, Rational(1, 2)};
        case ZeroKind::Gminus: return {-1, Rational(1, 2)};
    }
    return {0, 0};
}

inline int max_phi_order(ZeroKind kind) {
    return (kind == ZeroKind::Gplus || kind == ZeroKind::Gminus) ? 2 : 3;
}

// X_k in the uniform expansion 1 + sum_k X_k mu^(-k) of the Bessel factor.
inline AsymptoticPolynomial expansion_factor(ZeroKind kind, int k) {
    switch (kind) {
        case ZeroKind::J: return uv_coefficients(k).U;
        case ZeroKind::Jprime: return uv_coefficients(k).V;
        case ZeroKind::Tplus: return w_coefficients(k, Sign::plus, 1);
        case ZeroKind::Tminus: return w_coefficients(k, Sign::minus, 1);
        case ZeroKind::Gplus: return w_coefficients(k, Sign::plus, Rational(1, 2));
        case ZeroKind::Gminus: return w_coefficients(k, Sign::minus, Rational(1, 2));
    }
    return {};
}

// Coefficients of eps^1..eps^h in log(1 + sum_k x_k eps^k).
inline std::vector<AsymptoticPolynomial> log_series(const std::vector<AsymptoticPolynomial>& x) {
    const int h = static_cast<int>(x.size()) - 1;  // x[0] unused
    std::vector<AsymptoticPolynomial> l(static_cast<std::size_t>(h + 1));
    for (int n = 1; n <= h; ++n) {
        AsymptoticPolynomial acc = x[static_cast<std::size_t>(n)];
        for (int k = 1; k < n; ++k)
            acc -= Rational(k, n) * (l[static_cast<std::size_t>(k)] * x[static_cast<std::size_t>(n - k)]);
        l[static_cast<std::size_t>(n)] = acc;
    }
    return l;
}

// Coefficient of mu^(-h) in the Stirling series of log Gamma(mu+1).
inline Rational stirling_coefficient(int h) {
    switch (h) {
        case 1: return Rational(1, 12);
        case 3: return Rational(-1, 360);
        case 5: return Rational(1, 1260);
        default: return 0;
    }
}
}  // namespace detail

// Coefficient of mu^(-h) in log(1 +- w/mu) for the kind's prefactor.
inline Rational prefactor_coefficient(ZeroKind kind, int h) {
    auto [sign, w] = detail::prefactor(kind);
    if (sign == 0) return 0;
    Rational t = 1;
    for (int i = 0; i < h; ++i) t *= w * Rational(sign);
    return (h % 2 ? t : -t) / Rational(h);
}

inline double prefactor_log(ZeroKind kind, double mu) {
    auto [sign, w] = detail::prefactor(kind);
    return sign == 0 ? 0.0 : std::log1p(sign * w.to_double() / mu);
}

// phi_h for a single kind, h >= 1, derived by expanding
// -log(1 + sum X_k mu^-k) + log(prefactor) - (Stirling tail).
inline AsymptoticPolynomial phi_function(ZeroKind kind, int h) {
    if (h < 1 || h > detail::max_phi_order(kind))
        throw unsupported_error("phi_" + std::to_string(h) + " is not available for kind " + to_string(kind));
    std::vector<AsymptoticPolynomial> x(static_cast<std::size_t>(h + 1));
    for (int k = 1; k <= h; ++k) x[static_cast<std::size_t>(k)] = detail::expansion_factor(kind, k);
    AsymptoticPolynomial r = -detail::log_series(x)[static_cast<std::size_t>(h)];
    r += AsymptoticPolynomial(prefactor_coefficient(kind, h) - detail::stirling_coefficient(h));
    return r;
}

// phi_{-1}(lambda): coefficient of mu, common to all kinds.
inline double phi_minus1(double lambda) {
    const double r = std::sqrt(1.0 - lambda);
    return 1.0 - r + std::log1p(r) - std::log(2.0);
}

// phi_0(lambda): +-(1/4) log(1 - lambda).
inline double phi_0(ZeroKind kind, double lambda) {
    const double q = 0.25 * std::log1p(-lambda);
    return kind == ZeroKind::J ? q : -q;
}

// ---------------------------------------------------------------- combinations

struct SequenceCombination {
    std::string name;
    OrderKind order;
    std::vector<std::pair<Rational, ZeroKind>> terms;

    Rational weight_sum() const {
        Rational s = 0;
        for (const auto& t : terms) s += t.first;
        return s;
    }
};

inline SequenceCombination part_one_combination(OrderKind order = OrderKind::mu1) {
    return {"Jprime-J", order, {{1, ZeroKind::Jprime}, {-1, ZeroKind::J}}};
}
inline SequenceCombination part_two_combination() {
    return {"2J-Tplus-Tminus", OrderKind::mu0, {{2, ZeroKind::J}, {-1, ZeroKind::Tplus}, {-1, ZeroKind::Tminus}}};
}
inline SequenceCombination sphere2_combination() {
    return {"Gplus-Gminus", OrderKind::muS2, {{1, ZeroKind::Gplus}, {-1, ZeroKind::Gminus}}};
}

inline void check_combination(const SequenceCombination& c) {
    if (c.terms.empty()) throw unsupported_error("empty sequence combination");
    if (!c.weight_sum().is_zero())
        throw unsupported_error("combination " + c.name + " must have weights summing to zero");
}

inline AsymptoticPolynomial phi_functions(const SequenceCombination& c, int h) {
    check_combination(c);
    if (h < 1 || h > decomposition_length(c.order) - 1)
        throw unsupported_error("h outside the decomposition length of " + c.name);
    AsymptoticPolynomial r;
    for (const auto& [w, kind] : c.terms) r += w * phi_function(kind, h);
    return r;
}

inline AsymptoticPolynomial phi_functions(const ZeroSequenceSpec& spec, int h) {
    if (h < 1 || h > spec.ell - 1) throw unsupported_error("h outside the decomposition length");
    return phi_function(spec.kind, h);
}

// ---------------------------------------------------------------- published tables

namespace detail {
inline AsymptoticPolynomial poly(std::initializer_list<std::pair<const int, Rational>> t) {
    return AsymptoticPolynomial(t);
}
}  // namespace detail

// Reference phi tables, with three coefficient corrections
// (see README, "Corrections").
inline AsymptoticPolynomial published_phi(ZeroKind kind, int h) {
    using detail::poly;
    using R = Rational;
    if (kind == ZeroKind::J) {
        switch (h) {
            case 1: return poly({{0, R(-1, 12)}, {1, R(-1, 8)}, {3, R(5, 24)}});
            case 2: return poly({{2, R(-1, 16)}, {4, R(3, 8)}, {6, R(-5, 16)}});
            case 3:
                return poly({{0, R(1, 360)}, {3, R(-25, 384)}, {5, R(531, 640)}, {7, R(-221, 128)},
                             {9, R(1105, 1152)}});
        }
    }
    if (kind == ZeroKind::Tplus) {
        switch (h) {
            case 1: return poly({{0, R(11, 12)}, {1, R(-5, 8)}, {3, R(-7, 24)}});
            case 2: return poly({{0, R(-1, 2)}, {2, R(3, 16)}, {4, R(-1, 8)}, {6, R(7, 16)}});
            case 3:
                return poly({{0, R(121, 360)}, {3, R(-17, 384)}, {5, R(-389, 640)}, {7, R(203, 128)},
                             {9, R(-1463, 1152)}});
        }
    }
    if (kind == ZeroKind::Tminus) {
        switch (h) {
            case 1: return poly({{0, R(-13, 12)}, {1, R(11, 8)}, {3, R(-7, 24)}});
            case 2: return poly({{0, R(-1, 2)}, {2, R(19, 16)}, {4, R(-9, 8)}, {6, R(7, 16)}});
            case 3:
                return poly({{0, R(-119, 360)}, {3, R(527, 384)}, {5, R(-1989, 640)}, {7, R(427, 128)},
                             {9, R(-1463, 1152)}});
        }
    }
    throw unsupported_error("no published table for this kind and order");
}

inline AsymptoticPolynomial published_phi(const SequenceCombination& c, int h) {
    using detail::poly;
    using R = Rational;
    if (c.name == "Jprime-J") {
        switch (h) {
            case 1: return poly({{1, R(1, 2)}, {3, R(-1, 2)}});
            case 2: return poly({{2, R(1, 4)}, {4, R(-1)}, {6, R(3, 4)}});
            case 3: return poly({{3, R(11, 48)}, {5, R(-35, 16)}, {7, R(67, 16)}, {9, R(-107, 48)}});
        }
    }
    if (c.name == "2J-Tplus-Tminus") {
        switch (h) {
            case 1: return poly({{1, R(-1)}, {3, R(1)}});
            case 2: return poly({{0, R(1)}, {2, R(-3, 2)}, {4, R(2)}, {6, R(-3, 2)}});
            case 3: return poly({{3, R(-35, 24)}, {5, R(43, 8)}, {7, R(-67, 8)}, {9, R(107, 24)}});
        }
    }
    if (c.name == "Gplus-Gminus" && h == 2) return poly({{2, R(-1, 2)}, {4, R(1, 2)}});
    throw unsupported_error("no published table for combination " + c.name);
}

// Reference b_{sigma,0,0} values (corrected), before pole filtering.
inline std::vector<std::pair<int, Rational>> published_b(ZeroKind kind) {
    switch (kind) {
        case ZeroKind::J:
        case ZeroKind::Jprime: return {{1, Rational(-1, 12)}, {2, 0}, {3, Rational(1, 360)}};
        case ZeroKind::Tplus: return {{1, Rational(11, 12)}, {2, Rational(-1, 2)}, {3, Rational(121, 360)}};
        case ZeroKind::Tminus: return {{1, Rational(-13, 12)}, {2, Rational(-1, 2)}, {3, Rational(-119, 360)}};
        case ZeroKind::Gplus:
        case ZeroKind::Gminus: return {{2, Rational(-1, 8)}};
    }
    return {};
}

// ---------------------------------------------------------------- ledgers

// a_{0,0} and a_{0,1} of a single kind as functions of the order mu.
// Common part of a_{0,0}: (1/2) log 2 pi + (mu + 1/2) log mu - mu log 2 - log Gamma(mu+1).
inline double a00_common(double mu) {
    return 0.5 * std::log(2.0 * pi) + (mu + 0.5) * std::log(mu) - mu * std::log(2.0) - std::lgamma(mu + 1.0);
}
inline double a00_value(ZeroKind kind, double mu) { return a00_common(mu) + prefactor_log(kind, mu); }
inline double a01_value(ZeroKind kind, double mu) {
    return kind == ZeroKind::J ? 0.5 * (mu + 0.5) : 0.5 * (mu - 0.5);
}
// a_{0,1} - mu/2.
inline Rational a01_offset(ZeroKind kind) { return kind == ZeroKind::J ? Rational(1, 4) : Rational(-1, 4); }

struct LedgerEntry {
    int sigma;
    Rational b00;
    Rational b01;
};

struct CoefficientLedger {
    std::function<double(long)> a00;
    std::function<double(long)> a01;
    std::vector<LedgerEntry> b;
};

// Ledger of one sequence; b entries are kept only where zeta(s, U) has a pole.
inline CoefficientLedger ledger(const ZeroSequenceSpec& spec) {
    CoefficientLedger out;
    const ZeroKind kind = spec.kind;
    const OrderMap om = spec.order_map;
    out.a00 = [kind, om](long n) { return a00_value(kind, om(n)); };
    out.a01 = [kind, om](long n) { return a01_value(kind, om(n)); };
    for (int h = 1; h < spec.ell; ++h) {
        if (!zeta_has_pole(om.kind, h)) continue;
        out.b.push_back({h, phi_function(kind, h).constant(), 0});
    }
    return out;
}

// ---------------------------------------------------------------- log Gamma

// log Gamma(-lambda, S_n / mu^2) of the normalized zeros of one kind at order
// mu, from the product representation. sqrt(-lambda) has positive real part.
inline std::complex<double> log_gamma_double(ZeroKind kind, double mu, std::complex<double> lambda) {
    using C = std::complex<double>;
    if (lambda.imag() == 0.0 && lambda.real() >= 0.0) throw domain_error("lambda lies on the cut [0, inf)");
    if (!(mu > 0.0)) throw domain_error("order must be positive");
    const C z = std::sqrt(-lambda);
    const C x = mu * z;
    const C log_i = log_bessel_i(mu, x);
    const double l2 = std::log(2.0);
    if (kind == ZeroKind::J)
        return -log_i + mu * std::log(z) + mu * std::log(mu) - mu * l2 - std::lgamma(mu + 1.0);
    const C ratio = bessel_i_log_derivative(mu, x);  // x I' / I
    if (kind == ZeroKind::Jprime) {
        const C log_ip = log_i + std::log(ratio) - std::log(x);
        return -log_ip + (mu - 1.0) * std::log(x) - mu * l2 - std::lgamma(mu);
    }
    auto [sign, w] = detail::prefactor(kind);
    const double c = sign * w.to_double();
    if (kind == ZeroKind::Tminus && !(mu > 1.0)) throw domain_error("Tminus needs order > 1");
    if (kind == ZeroKind::Gminus && !(mu > 0.5)) throw domain_error("Gminus needs order > 1/2");
    return -(log_i + std::log(c + ratio)) + std::log1p(c / mu) + mu * std::log(x) - mu * l2 - std::lgamma(mu);
}

inline std::complex<double> log_gamma_double(std::complex<double> lambda, long n, const ZeroSequenceSpec& spec) {
    return log_gamma_double(spec.kind, spec.mu(n), lambda);
}

// phi_{-1} mu + phi_0 + sum_{h=1}^{H} phi_h mu^-h at real lambda < 0.
inline double expansion_value(ZeroKind kind, double mu, double lambda, int order) {
    double s = phi_minus1(lambda) * mu + phi_0(kind, lambda);
    for (int h = 1; h <= order; ++h) s += phi_function(kind, h).eval_lambda(lambda) * std::pow(mu, -h);
    return s;
}

struct ExpansionCheck {
    double max_deviation;
    double fitted_constant;  // max_deviation * mu^(order+1)
};

inline ExpansionCheck expansion_check(ZeroKind kind, double mu, const std::vector<double>& lambdas,
                                      int order = -1) {
    if (order < 0) order = detail::max_phi_order(kind);
    double dev = 0.0;
    for (double lam : lambdas) {
        if (!(lam < 0.0)) throw domain_error("expansion_check uses lambda < 0");
        const double exact = log_gamma_double(kind, mu, lam).real();
        dev = std::max(dev, std::abs(exact - expansion_value(kind, mu, lam, order)));
    }
    return {dev, dev * std::pow(mu, order + 1)};
}

inline ExpansionCheck expansion_check(const ZeroSequenceSpec& spec, long n, const std::vector<double>& lambdas) {
    return expansion_check(spec.kind, spec.mu(n), lambdas);
}

inline const std::vector<double>& default_lambda_grid() {
    static const std::vector<double> g = {-0.5, -1.0, -2.0, -5.0, -10.0};
    return g;
}

}  // namespace conetorsion
