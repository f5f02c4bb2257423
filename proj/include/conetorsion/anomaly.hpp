#pragma once

// Boundary anomaly between the cone metric and a product metric near the
// boundary, Reidemeister torsion of the cone, and the comparison of the
// torsion with the smooth-manifold prediction.

#include <cmath>
#include <map>
#include <vector>

#include "conetorsion/error.hpp"
#include "conetorsion/rational.hpp"
#include "conetorsion/spectra.hpp"
#include "conetorsion/torsion.hpp"

namespace conetorsion {

enum class SphereParity { even, odd };

struct AnomalyResult {
    double value = 0.0;
    SphereParity parity = SphereParity::odd;
    std::map<int, Rational> exact_coefficients;  // power of a -> coefficient
};

inline int euler_characteristic_sphere(int n) { return n % 2 == 0 ? 2 : 0; }

// Boundary S^(2p):
// (a^(2p)/8) sum_{j<=[p-1/2]} 1/(j!(p-j)!) sum_{h<=j} binom(j,h) (-1)^h / ((p-j+h) a^(2(j-h))) chi(S^(2p)).
inline std::map<int, Rational> even_sphere_coefficients(int p) {
    if (p < 1) throw domain_error("p must be >= 1");
    const Rational chi(euler_characteristic_sphere(2 * p));
    std::map<int, Rational> c;
    for (int j = 0; 2 * j <= 2 * p - 1; ++j) {
        const Rational lead = Rational(1) / (Rational(detail::factorial(j)) * Rational(detail::factorial(p - j)));
        for (int h = 0; h <= j; ++h) {
            const Rational t = Rational(detail::binomial(j, h) * (h % 2 ? -1 : 1)) / Rational(p - j + h);
            c[2 * p - 2 * (j - h)] += Rational(1, 8) * lead * t * chi;
        }
    }
    for (auto it = c.begin(); it != c.end();) it = it->second.is_zero() ? c.erase(it) : std::next(it);
    return c;
}

inline void check_sine(double a) {
    if (!(a > 0.0 && a <= 1.0)) throw domain_error("a = sin(alpha) must lie in (0, 1]");
}

inline AnomalyResult anomaly_even_sphere(int p, double a) {
    check_sine(a);
    AnomalyResult r;
    r.parity = SphereParity::even;
    r.exact_coefficients = even_sphere_coefficients(p);
    r.value = eval_power_map(r.exact_coefficients, a);
    return r;
}

// Boundary S^(2p-1); the same sum as the conjectured torsion correction.
inline AnomalyResult anomaly_odd_sphere(int p, double a) {
    check_sine(a);
    AnomalyResult r;
    r.parity = SphereParity::odd;
    r.exact_coefficients = odd_sphere_coefficients(p);
    r.value = eval_power_map(r.exact_coefficients, a);
    return r;
}

// log tau = (1/2) log Vol(C_alpha S^n_{l sin alpha}).
inline double reidemeister(const ConeGeometry& g) {
    g.validate();
    return 0.5 * std::log(cone_volume(g));
}

struct CmDecomposition {
    double reidemeister = 0.0;
    double euler_term = 0.0;  // (1/4) chi(boundary) log 2
    double anomaly = 0.0;
    double predicted_smooth = 0.0;
    double actual = 0.0;
    double singular_term = 0.0;
};

// Compares the torsion with log tau + (1/4) chi(S^n) log 2 + anomaly, the value
// for a smooth manifold with boundary. The difference is the contribution of
// the cone tip.
inline CmDecomposition cm_decomposition(const ConeGeometry& g) {
    g.validate();
    CmDecomposition r;
    const double a = g.a();
    r.reidemeister = reidemeister(g);
    r.euler_term = 0.25 * euler_characteristic_sphere(g.n) * std::log(2.0);
    r.anomaly = g.n % 2 == 0 ? anomaly_even_sphere(g.n / 2, a).value : anomaly_odd_sphere((g.n + 1) / 2, a).value;
    r.predicted_smooth = r.reidemeister + r.euler_term + r.anomaly;
    r.actual = torsion_closed(g).log_torsion;
    r.singular_term = r.actual - r.predicted_smooth;
    return r;
}

// Singular term as a polynomial in a for odd n, where the closed form and the
// smooth prediction share the volume term and chi(S^n) = 0.
inline std::map<int, Rational> cm_singular_coefficients(int n) {
    if (n % 2 == 0) throw unsupported_error("the singular term is polynomial in sin(alpha) only for odd n");
    std::map<int, Rational> c = closed_sine_coefficients(n);
    for (const auto& [k, v] : odd_sphere_coefficients((n + 1) / 2)) c[k] -= v;
    for (auto it = c.begin(); it != c.end();) it = it->second.is_zero() ? c.erase(it) : std::next(it);
    return c;
}

}  // namespace conetorsion
