#pragma once

// Spectral decomposition engine: the Mellin-contour map Phi, its Laurent data
// at s = 0, the continued A-sums, and zeta(0) / zeta'(0) of combinations of
// double sequences.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "conetorsion/besselseq.hpp"
#include "conetorsion/error.hpp"
#include "conetorsion/rational.hpp"
#include "conetorsion/spectra.hpp"
#include "conetorsion/summation.hpp"

namespace conetorsion {

// ---------------------------------------------------------------- Phi

// value(s) = sum_i c_i Gamma(s + a_i) / (Gamma(a_i) s)
struct PhiTransform {
    std::vector<std::pair<Rational, Rational>> terms;  // (c, a)

    double value(double s) const {
        double v = 0.0;
        for (const auto& [c, a] : terms)
            v += c.to_double() * std::exp(std::lgamma(s + a.to_double()) - std::lgamma(a.to_double())) / s;
        return v;
    }
};

inline PhiTransform phi_mellin(const AsymptoticPolynomial& poly) {
    if (!poly.constant().is_zero())
        throw domain_error("phi_mellin needs a polynomial without constant term, got " + poly.str());
    return {poly.terms()};
}

struct PhiAtZero {
    Rational residue;
    ExactConstant finite_part;

    MeromorphicValue numeric() const { return {residue.to_double(), finite_part.to_double(), 0.0}; }
};

// Gamma(s+a)/Gamma(a) = 1 + psi(a) s + O(s^2), so each term has residue c
// and finite part c psi(a).
inline PhiAtZero phi_at_zero_exact(const PhiTransform& phi) {
    PhiAtZero r{0, {0, 0, 0}};
    for (const auto& [c, a] : phi.terms) {
        if (!(Rational(0) < a)) throw domain_error("phi term exponent must be positive");
        r.residue += c;
        r.finite_part += digamma_exact(a) * c;
    }
    return r;
}

inline MeromorphicValue phi_at_zero(const PhiTransform& phi) { return phi_at_zero_exact(phi).numeric(); }

// ---------------------------------------------------------------- A-sums

struct ASumOptions {
    long truncation = 2000;
    double tolerance = 1e-8;
    int extra_terms = 6;  // asymptotic terms subtracted beyond the multiplicity growth
};

struct ASumResult {
    double value = 0.0;
    double tail_estimate = 0.0;
    long truncation = 0;
};

namespace detail {
// Coefficient of u^-k in sum_i w_i log(1 + prefactor_i / u).
inline Rational combined_prefactor_coefficient(const SequenceCombination& c, int k) {
    Rational s = 0;
    for (const auto& [w, kind] : c.terms) s += w * prefactor_coefficient(kind, k);
    return s;
}

inline bool has_prefactor(const SequenceCombination& c) {
    for (const auto& t : c.terms)
        if (detail::prefactor(t.second).first != 0) return true;
    return false;
}
}  // namespace detail

// Finite part at s = 0 of A_{0,0}(s) = sum_n m(n) (g(u_n) - sum_{pole k} b_k u_n^-k) u_n^(-2s),
// where g = sum_i w_i a_{0,0}^{(i)}. The Stirling parts cancel since the
// weights sum to zero, leaving g(u) = sum_i w_i log(1 + prefactor_i / u).
// Terms up to u^-K are subtracted and summed through zeta(k, U).
inline ASumResult a00_continued(const SequenceCombination& comb, const BaseSequence& base,
                                const ASumOptions& opt = {}) {
    check_combination(comb);
    if (opt.truncation < 100) throw domain_error("A-sum truncation must be >= 100");
    ASumResult out;
    out.truncation = opt.truncation;
    if (!detail::has_prefactor(comb)) return out;

    const int kmax = base.mult_degree() + opt.extra_terms;
    constexpr int kseries = 60;
    std::vector<double> c(kseries + 1, 0.0);
    for (const auto& [w, kind] : comb.terms) {
        auto [sign, pw] = detail::prefactor(kind);
        const double x = sign * pw.to_double();
        double xk = 1.0;
        for (int k = 1; k <= kseries; ++k) {
            xk *= x;
            c[static_cast<std::size_t>(k)] += w.to_double() * (k % 2 ? xk : -xk) / k;
        }
    }

    auto remainder = [&](double u) {
        if (u > 8.0) {
            double s = 0.0;
            for (int k = kseries; k > kmax; --k) s = (s + c[static_cast<std::size_t>(k)]) / u;
            return s / std::pow(u, kmax);
        }
        double g = 0.0;
        for (const auto& [w, kind] : comb.terms) g += w.to_double() * prefactor_log(kind, u);
        double sub = 0.0;
        for (int k = kmax; k >= 1; --k) sub = (sub + c[static_cast<std::size_t>(k)]) / u;
        return g - sub;
    };
    auto term = [&](long n) { return base.mult(n) * remainder(base.u(n)); };
    const double s1 = deterministic_sum(1, opt.truncation, term);
    const double s2 = deterministic_sum(1, 2 * opt.truncation, term);
    const int p = kmax - base.mult_degree();
    const double corr = (s2 - s1) / (std::pow(2.0, p) - 1.0);
    out.tail_estimate = std::abs(corr) + 1e-15 * std::abs(s2);
    double v = s2 + corr;

    for (int k = 1; k <= kmax; ++k) {
        const Rational ck = detail::combined_prefactor_coefficient(comb, k);
        if (ck.is_zero()) continue;
        if (base.is_pole(k)) {
            // Subtracted by the b ledger: b_k of the combination equals c_k.
            Rational b = 0;
            for (const auto& [w, kind] : comb.terms) b += w * phi_function(kind, k).constant();
            if (b != ck) throw error("ledger b_" + std::to_string(k) + " does not match the prefactor expansion");
            continue;
        }
        v += ck.to_double() * base.zeta_laurent(k).finite_part();
    }
    out.value = v;
    if (out.tail_estimate > opt.tolerance) throw convergence_error("A-sum tail estimate exceeds the tolerance");
    return out;
}

// Sum of w_i (a_{0,1}^{(i)} - mu/2): the combined a_{0,1} is this constant
// times the multiplicity, so A_{0,1}(s) = C zeta(2s, U).
inline Rational a01_constant(const SequenceCombination& comb) {
    check_combination(comb);
    Rational s = 0;
    for (const auto& [w, kind] : comb.terms) s += w * a01_offset(kind);
    return s;
}

// ---------------------------------------------------------------- zeta of combinations

struct PoleContribution {
    int sigma;
    PhiAtZero phi;
    double zeta_residue;
    double zeta_finite_part;
};

struct CombinationZeta {
    std::string name;
    double value = 0.0;       // zeta(0) of the combination
    double derivative = 0.0;  // zeta'(0)
    double a00 = 0.0;
    double a01 = 0.0;
    double a01_prime = 0.0;
    double tail_estimate = 0.0;
    long truncation = 0;
    std::vector<PoleContribution> poles;
};

// zeta(0) and zeta'(0) of sum_i w_i zeta(s, S_i) for double sequences of zeros
// over the base sequence U of the combination's order map, power kappa = 2.
// Only indices sigma_h that are poles of zeta(s, U) contribute.
inline CombinationZeta zeta_zero_and_deriv(const SequenceCombination& comb, double nu, const ASumOptions& opt = {}) {
    check_combination(comb);
    const BaseSequence base(comb.order, nu);
    constexpr double kappa = 2.0;
    CombinationZeta out;
    out.name = comb.name;

    const ASumResult a00 = a00_continued(comb, base, opt);
    out.a00 = a00.value;
    out.tail_estimate = a00.tail_estimate;
    out.truncation = a00.truncation;

    const double c01 = a01_constant(comb).to_double();
    const Laurent z0 = base.zeta_laurent(0);
    out.a01 = c01 * z0.finite_part();
    out.a01_prime = 2.0 * c01 * z0.derivative();

    double ru_sum = 0.0, rz_sum = 0.0, fp_sum = 0.0;
    const int ell = decomposition_length(comb.order);
    for (int h = 1; h < ell; ++h) {
        if (!base.is_pole(h)) continue;
        const AsymptoticPolynomial phi = phi_functions(comb, h);
        const PhiAtZero at0 = phi_at_zero_exact(phi_mellin(phi.without_constant()));
        const Laurent zl = base.zeta_laurent(h);
        out.poles.push_back({h, at0, zl.residue, zl.finite_part()});
        const MeromorphicValue m = at0.numeric();
        ru_sum += m.residue * zl.residue;
        rz_sum += m.finite_part * zl.residue;
        fp_sum += m.residue * zl.finite_part();
    }
    out.value = -out.a01 + ru_sum / kappa;
    out.derivative = -out.a00 - out.a01_prime + euler_gamma / kappa * ru_sum + rz_sum / kappa + fp_sum;
    return out;
}

// ---------------------------------------------------------------- contour check

struct ContourOptions {
    double theta = pi / 4;
    double c = 0.5;
    double tolerance = 1e-10;
};

// Numerical value of
//   int_0^inf t^(s-1) (1/2 pi i) int_Lambda e^(-lambda t) / (-lambda) (1-lambda)^(-a) dlambda dt
// with Lambda = {c + r e^(+-i theta)}, by nested adaptive Gauss-Kronrod.
// Compare with Gamma(s+a) / (Gamma(a) s).
inline double contour_integral_check(double s, double a, const ContourOptions& opt = {}) {
    if (!(s > 0.0 && s < 2.0)) throw domain_error("contour check needs 0 < s < 2");
    if (!(a > 0.0)) throw domain_error("contour check needs a > 0");
    if (!(opt.theta > 0.0 && opt.theta < pi / 2)) throw domain_error("contour angle must lie in (0, pi/2)");
    if (!(opt.c > 0.0 && opt.c < 1.0)) throw domain_error("contour vertex must lie in (0, 1)");
    using C = std::complex<double>;
    using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
    const C dir = std::polar(1.0, opt.theta);

    // Inner integral along the ray c + r e^(i theta); the lower ray is its
    // conjugate, and the two combine to -Im(.)/pi.
    auto inner = [&](double t) {
        auto g = [&](double r) {
            const C lam = opt.c + r * dir;
            const C f = std::exp(-lam * t) / (-lam) * std::pow(1.0 - lam, -a) * dir;
            return f.imag();
        };
        const double rmax = std::max(2.0, 50.0 / (t * std::cos(opt.theta)));
        double err = 0.0;
        double v = GK::integrate(g, 0.0, 1.0, 15, opt.tolerance, &err);
        auto gv = [&](double w) {
            const double r = std::exp(w);
            return g(r) * r;
        };
        v += GK::integrate(gv, 0.0, std::log(rmax), 15, opt.tolerance, &err);
        return -v / pi;
    };
    // Outer integral over t = e^v. The inner integral tends to 1 as t -> 0,
    // so the piece below t0 = e^vmin is t0^s / s up to O(t0^(s+min(a,1))).
    auto outer = [&](double v) {
        const double t = std::exp(v);
        return std::pow(t, s) * inner(t);
    };
    const double vmin = -20.0 / s;
    const double vmax = std::log(60.0);
    double err = 0.0;
    const double r = GK::integrate(outer, vmin, vmax, 15, opt.tolerance, &err) + std::exp(s * vmin) / s;
    if (!std::isfinite(r)) throw convergence_error("contour quadrature failed");
    return r;
}

inline double contour_integral_exact(double s, double a) {
    return std::exp(std::lgamma(s + a) - std::lgamma(a)) / s;
}

}  // namespace conetorsion
