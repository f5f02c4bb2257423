#pragma once

// Analytic torsion of the cones C_alpha S^n, n = 1, 2, 3: closed forms, the
// spectral assembly from zeta determinants, the function f(nu) and the
// conjectured formula over odd spheres.

#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "conetorsion/besselseq.hpp"
#include "conetorsion/decomp.hpp"
#include "conetorsion/error.hpp"
#include "conetorsion/rational.hpp"
#include "conetorsion/spectra.hpp"

namespace conetorsion {

enum class TorsionMethod { closed, spectral };

inline std::string to_string(TorsionMethod m) { return m == TorsionMethod::closed ? "closed" : "spectral"; }

struct NamedTerm {
    std::string name;
    double value;
};

struct TorsionDiagnostics {
    long truncation = 0;
    double tail_estimate = 0.0;
};

struct TorsionBreakdown {
    double log_torsion = 0.0;
    double volume_term = 0.0;  // (1/2) log Vol
    std::vector<NamedTerm> extra_terms;
    TorsionMethod method = TorsionMethod::closed;
    TorsionDiagnostics diagnostics;
    // Spectral method only: coefficient of log l^2 and the individual pieces.
    double log_l2_coefficient = std::numeric_limits<double>::quiet_NaN();
    std::vector<NamedTerm> components;
};

// ---------------------------------------------------------------- volumes

inline double sphere_volume(int n) {
    return 2.0 * std::pow(pi, 0.5 * (n + 1)) / std::tgamma(0.5 * (n + 1));
}

// Vol(C_alpha S^n_{l sin alpha}) = Vol(S^n) (l sin alpha)^n l / (n + 1).
inline double cone_volume(int n, double alpha, double l) {
    if (n < 1) throw domain_error("cone dimension must be >= 1");
    return sphere_volume(n) * std::pow(l * std::sin(alpha), n) * l / (n + 1);
}

inline double cone_volume(const ConeGeometry& g) { return cone_volume(g.n, g.alpha, g.l); }

// ---------------------------------------------------------------- f(nu)

struct FSeriesResult {
    double value = 0.0;
    double tail_bound = 0.0;
    int terms = 0;
};

// f(nu) = -log(nu^2/pi) + sum_{k,j>=0} binom(-k-1/2, j) zeta_S2(k+j+1/2)
//         / ((2k+1) 2^(2k) 2^(2j) nu^(2k+2j+1)),
// zeta_S2 the unshifted S^2 zeta. `terms` diagonals k + j = m < terms are summed;
// the tail is bounded geometrically from the ratio of the last diagonals.
inline FSeriesResult f_series(double nu, int terms) {
    if (!(nu >= 1.0) || !std::isfinite(nu)) throw domain_error("f_series needs nu >= 1");
    if (terms < 3) throw domain_error("f_series needs at least 3 terms");
    std::vector<double> diag(static_cast<std::size_t>(terms), 0.0);
    for (int m = 0; m < terms; ++m) {
        const double z = zeta_sphere2(m + 0.5, 0.0);
        double d = 0.0;
        for (int k = 0; k <= m; ++k) {
            const int j = m - k;
            double binom = 1.0;
            for (int i = 0; i < j; ++i) binom *= (-k - 0.5 - i) / (i + 1.0);
            d += binom / ((2.0 * k + 1.0) * std::pow(4.0, k) * std::pow(4.0, j));
        }
        diag[static_cast<std::size_t>(m)] = d * z / std::pow(nu, 2 * m + 1);
    }
    CompensatedSum s;
    for (double d : diag) s += d;
    double ratio = 0.0;
    for (int m = terms - 3; m < terms - 1; ++m) {
        const double a = std::abs(diag[static_cast<std::size_t>(m)]);
        if (a > 0.0) ratio = std::max(ratio, std::abs(diag[static_cast<std::size_t>(m + 1)]) / a);
    }
    FSeriesResult r;
    r.terms = terms;
    r.value = -std::log(nu * nu / pi) + s.value();
    if (ratio >= 1.0) throw convergence_error("f series diagonals do not decrease");
    r.tail_bound = std::abs(diag.back()) * ratio / (1.0 - ratio);
    return r;
}

// Smallest diagonal count whose tail bound is below `tolerance`.
inline FSeriesResult f_series_auto(double nu, double tolerance = 1e-12) {
    for (int t = 8; t <= 256; t *= 2) {
        FSeriesResult r = f_series(nu, t);
        if (r.tail_bound < tolerance) return r;
    }
    throw convergence_error("f series did not reach the requested tolerance");
}

// f(nu) = F(0, nu) - log(nu^2/pi), where
// F(s, nu) = sum_n (2n+1) mu_n^(-2s) log((1 + 1/(2 mu_n)) / (1 - 1/(2 mu_n)))
// is continued to s = 0 through the S^2 base zeta.
inline double f_continuation(double nu, const ASumOptions& opt = {}) {
    const BaseSequence base(OrderKind::muS2, nu);
    const ASumResult a = a00_continued(sphere2_combination(), base, opt);
    return a.value - std::log(nu * nu / pi);
}

constexpr double kFSeriesThreshold = 1.5;

inline double f_function(double nu) {
    if (!(nu >= 1.0)) throw domain_error("f needs nu >= 1");
    return nu < kFSeriesThreshold ? f_continuation(nu) : f_series_auto(nu).value;
}

// ---------------------------------------------------------------- closed forms

// Polynomial part in a = sin(alpha) of the closed forms (power -> coefficient).
inline std::map<int, Rational> closed_sine_coefficients(int n) {
    switch (n) {
        case 1: return {{1, Rational(1, 2)}};
        case 2: return {{2, Rational(1, 4)}};
        case 3: return {{1, Rational(3, 4)}, {3, Rational(-1, 12)}};
        default: throw unsupported_error("torsion is implemented for n = 1, 2, 3");
    }
}

inline TorsionBreakdown torsion_closed(const ConeGeometry& g) {
    g.validate();
    const double a = g.a();
    TorsionBreakdown r;
    r.method = TorsionMethod::closed;
    r.volume_term = 0.5 * std::log(cone_volume(g));
    const auto coeffs = closed_sine_coefficients(g.n);
    if (g.n == 2) r.extra_terms.push_back({"f", -0.5 * f_function(1.0 / a)});
    for (const auto& [k, c] : coeffs)
        r.extra_terms.push_back({k == 1 ? "sin" : "sin^" + std::to_string(k), c.to_double() * std::pow(a, k)});
    r.log_torsion = r.volume_term;
    for (const auto& t : r.extra_terms) r.log_torsion += t.value;
    return r;
}

// ---------------------------------------------------------------- spectral assembly

struct FixedOrderTerm {
    double order;
    Rational weight;
};

struct TorsionAssembly {
    std::vector<FixedOrderTerm> fixed;
    std::vector<SequenceCombination> combinations;
};

// log T = (1/2) sum_q (-1)^q q zeta'(0, Delta^(q)). Collects the weight of every
// family in the spectrum tables: fixed-order J families merge by order, double
// families group by order map into combinations over the base sequence U,
// with multiplicities normalized to those of U.
inline TorsionAssembly torsion_assembly(int dim) {
    const auto tables = spectrum_tables(dim);
    std::map<double, Rational> fixed;
    std::map<OrderKind, std::map<ZeroKind, Rational>> dbl;
    for (const auto& deg : tables) {
        const int q = deg.degree;
        const Rational w(q % 2 ? -q : q, 2);
        for (const auto& s : deg.simple) {
            if (s.kind != ZeroKind::J) throw unsupported_error("fixed-order families must be of kind J");
            fixed[s.order] += w;
        }
        for (const auto& d : deg.dbl) {
            const Multiplicity base_mult = ZeroSequenceSpec(d.kind, d.order, 1.0).multiplicity;
            const double r1 = multiplicity_value(d.multiplicity, 1) / multiplicity_value(base_mult, 1);
            const double r2 = multiplicity_value(d.multiplicity, 2) / multiplicity_value(base_mult, 2);
            if (r1 != r2 || r1 != std::floor(r1)) throw error("family multiplicity is not a multiple of the base");
            dbl[d.order][d.kind] += w * Rational(static_cast<std::int64_t>(r1));
        }
    }
    TorsionAssembly out;
    for (const auto& [order, w] : fixed)
        if (!w.is_zero()) out.fixed.push_back({order, w});
    for (const auto& [order, kinds] : dbl) {
        SequenceCombination c;
        c.order = order;
        for (const auto& [kind, w] : kinds) {
            if (w.is_zero()) continue;
            c.terms.push_back({w, kind});
            if (!c.name.empty()) c.name += " ";
            c.name += (Rational(0) < w ? "+" : "") + w.str() + "*" + to_string(kind);
        }
        c.name = to_string(order) + ": " + c.name;
        if (!c.terms.empty()) out.combinations.push_back(c);
    }
    return out;
}

inline TorsionBreakdown torsion_spectral(const ConeGeometry& g, double tolerance = 1e-8) {
    g.validate();
    if (!(tolerance >= 1e-8)) throw domain_error("spectral tolerance must be >= 1e-8");
    const double nu = g.nu();
    const double log_l2 = 2.0 * std::log(g.l);
    const TorsionAssembly asmb = torsion_assembly(g.n);

    TorsionBreakdown r;
    r.method = TorsionMethod::spectral;
    r.volume_term = 0.5 * std::log(cone_volume(g));
    double total = 0.0;
    double coeff = 0.0;
    for (const auto& f : asmb.fixed) {
        const ZetaAtZero z = bessel_quadratic_zeta_at0(f.order, 0.0, g.l);
        const double w = f.weight.to_double();
        total += w * z.derivative;
        coeff += w * z.value;
        std::ostringstream name;
        name << "z'(0) order " << f.order << " weight " << f.weight.str();
        r.components.push_back({name.str(), w * z.derivative});
    }
    ASumOptions opt;
    opt.tolerance = tolerance;
    for (const auto& c : asmb.combinations) {
        const CombinationZeta z = zeta_zero_and_deriv(c, nu, opt);
        total += z.derivative + z.value * log_l2;
        coeff += z.value;
        r.components.push_back({c.name + " zeta'(0)", z.derivative});
        r.components.push_back({c.name + " zeta(0) log l^2", z.value * log_l2});
        r.diagnostics.truncation = std::max(r.diagnostics.truncation, z.truncation);
        r.diagnostics.tail_estimate += z.tail_estimate;
    }
    r.log_torsion = total;
    r.log_l2_coefficient = coeff;
    r.extra_terms = {{"spectral minus volume", total - r.volume_term}};
    return r;
}

// ---------------------------------------------------------------- conjecture

namespace detail {
inline std::int64_t factorial(int n) {
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) {
        if (f > INT64_MAX / i) throw overflow_error("factorial overflow");
        f *= i;
    }
    return f;
}
inline std::int64_t double_factorial(int n) {
    std::int64_t f = 1;
    for (int i = n; i > 1; i -= 2) f *= i;
    return f;
}
inline std::int64_t binomial(int n, int k) {
    std::int64_t b = 1;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}
}  // namespace detail

// Coefficients (power of sin alpha -> rational) of
// sum_{j<p} 2^(p-j)/(j! (2(p-j)-1)!!) sum_{h<=j} binom(j,h) (-1)^h csc^(2(j-h)) / (2(p-j+h)-1)
//   * (2p-1)! sin^(2p-1) / (4^p (p-1)!).
inline std::map<int, Rational> odd_sphere_coefficients(int p) {
    if (p < 1) throw domain_error("p must be >= 1");
    const Rational outer = Rational(detail::factorial(2 * p - 1)) /
                           (Rational(std::int64_t{1} << (2 * p)) * Rational(detail::factorial(p - 1)));
    std::map<int, Rational> c;
    for (int j = 0; j < p; ++j) {
        const Rational lead = Rational(std::int64_t{1} << (p - j)) /
                              (Rational(detail::factorial(j)) * Rational(detail::double_factorial(2 * (p - j) - 1)));
        for (int h = 0; h <= j; ++h) {
            const Rational t = Rational(detail::binomial(j, h) * (h % 2 ? -1 : 1)) / Rational(2 * (p - j + h) - 1);
            const int power = 2 * p - 1 - 2 * (j - h);
            c[power] += lead * t * outer;
        }
    }
    for (auto it = c.begin(); it != c.end();) it = it->second.is_zero() ? c.erase(it) : std::next(it);
    return c;
}

inline double eval_power_map(const std::map<int, Rational>& c, double a) {
    double s = 0.0;
    for (const auto& [k, v] : c) s += v.to_double() * std::pow(a, k);
    return s;
}

// Conjectured log T(C_alpha S^(2p-1)).
inline double conjecture_formula(int p, double alpha, double l) {
    if (!(alpha > 0.0) || alpha > pi / 2 + 1e-15) throw domain_error("alpha must lie in (0, pi/2]");
    if (!(l > 0.0)) throw domain_error("length must be positive");
    return 0.5 * std::log(cone_volume(2 * p - 1, alpha, l)) + eval_power_map(odd_sphere_coefficients(p), std::sin(alpha));
}

}  // namespace conetorsion
