#pragma once

// Cone geometry, order maps, the Laplace spectra of the cones over S^1, S^2,
// S^3, and the simple-sequence zeta functions built from sphere spectra.

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "conetorsion/error.hpp"
#include "conetorsion/jet.hpp"
#include "conetorsion/specfun.hpp"

namespace conetorsion {

struct ConeGeometry {
    int n = 3;          // dimension of the sphere
    double alpha = pi / 2;
    double l = 1.0;

    ConeGeometry() = default;
    ConeGeometry(int dim, double angle, double length) : n(dim), alpha(angle), l(length) { validate(); }

    void validate() const {
        if (n < 1 || n > 3) throw unsupported_error("sphere dimension must be 1, 2 or 3");
        if (!(alpha > 0.0) || alpha > pi / 2 + 1e-15) throw domain_error("alpha must lie in (0, pi/2]");
        if (!(l > 0.0) || !std::isfinite(l)) throw domain_error("length must be positive");
    }
    double a() const { return std::sin(alpha); }
    double nu() const { return 1.0 / std::sin(alpha); }
};

struct MeromorphicValue {
    double residue = 0.0;
    double finite_part = 0.0;
    double location = 0.0;
};

// ---------------------------------------------------------------- order maps

enum class OrderKind {
    mu0,   // sqrt(nu^2 n(n+2) + 1), S^3
    mu1,   // nu (n+1), S^3
    muS2,  // sqrt(nu^2 n(n+1) + 1/4)
    muS1,  // nu n
};

struct OrderMap {
    OrderKind kind;
    double nu;

    double operator()(long n) const {
        const double x = static_cast<double>(n);
        switch (kind) {
            case OrderKind::mu0: return std::sqrt(nu * nu * x * (x + 2.0) + 1.0);
            case OrderKind::mu1: return nu * (x + 1.0);
            case OrderKind::muS2: return std::sqrt(nu * nu * x * (x + 1.0) + 0.25);
            case OrderKind::muS1: return nu * x;
        }
        return 0.0;
    }
};

inline std::string to_string(OrderKind k) {
    switch (k) {
        case OrderKind::mu0: return "mu0";
        case OrderKind::mu1: return "mu1";
        case OrderKind::muS2: return "muS2";
        case OrderKind::muS1: return "muS1";
    }
    return "?";
}

// ---------------------------------------------------------------- sphere spectra

// Multiplicity maps n -> m(n) appearing in the spectra.
enum class Multiplicity { two, two_n_plus_1, n_plus_1_squared, two_n_n_plus_2, n_n_plus_2, one };

inline double multiplicity_value(Multiplicity m, long n) {
    const double x = static_cast<double>(n);
    switch (m) {
        case Multiplicity::one: return 1.0;
        case Multiplicity::two: return 2.0;
        case Multiplicity::two_n_plus_1: return 2.0 * x + 1.0;
        case Multiplicity::n_plus_1_squared: return (x + 1.0) * (x + 1.0);
        case Multiplicity::two_n_n_plus_2: return 2.0 * x * (x + 2.0);
        case Multiplicity::n_n_plus_2: return x * (x + 2.0);
    }
    return 0.0;
}

inline std::string to_string(Multiplicity m) {
    switch (m) {
        case Multiplicity::one: return "1";
        case Multiplicity::two: return "2";
        case Multiplicity::two_n_plus_1: return "2n+1";
        case Multiplicity::n_plus_1_squared: return "(n+1)^2";
        case Multiplicity::two_n_n_plus_2: return "2n(n+2)";
        case Multiplicity::n_n_plus_2: return "n(n+2)";
    }
    return "?";
}

struct SphereFamilyEntry {
    int degree;
    std::string eigenvalue;  // formula in n
    Multiplicity multiplicity;
};

struct SphereSpectrum {
    int dim;
    std::vector<SphereFamilyEntry> families;
};

// Coexact eigenvalue tables used by the cone spectra.
inline SphereSpectrum sphere_spectrum(int dim) {
    switch (dim) {
        case 1: return {1, {{0, "n^2", Multiplicity::two}}};
        case 2: return {2, {{0, "n(n+1)", Multiplicity::two_n_plus_1}}};
        case 3:
            return {3,
                    {{0, "n(n+2)", Multiplicity::n_plus_1_squared},
                     {1, "(n+1)^2", Multiplicity::two_n_n_plus_2},
                     {2, "n(n+2)", Multiplicity::n_plus_1_squared}}};
        default: throw unsupported_error("sphere spectrum needs dim in {1,2,3}");
    }
}

// ---------------------------------------------------------------- cone spectra

// {j_{order,k}^2 / l^2}_k for a zero kind of fixed order.
struct SimpleFamily {
    ZeroKind kind;
    double order;
};

// {m(n) : z_{mu(n),k}^2 / l^2}_{n,k}.
struct DoubleFamily {
    ZeroKind kind;
    OrderKind order;
    Multiplicity multiplicity;
};

struct DegreeSpectrum {
    int degree;
    std::vector<SimpleFamily> simple;
    std::vector<DoubleFamily> dbl;
};

// Spectra of the form Laplacians on the cone with absolute boundary
// conditions, degree by degree, as unions of Bessel-zero families.
inline std::vector<DegreeSpectrum> spectrum_tables(int dim) {
    using Z = ZeroKind;
    using O = OrderKind;
    using M = Multiplicity;
    switch (dim) {
        case 1:
            return {
                {0, {{Z::J, 1.0}}, {{Z::Jprime, O::muS1, M::two}}},
                {1, {{Z::J, 0.0}, {Z::J, 1.0}}, {{Z::J, O::muS1, M::two}, {Z::Jprime, O::muS1, M::two}}},
                {2, {{Z::J, 0.0}}, {{Z::J, O::muS1, M::two}}},
            };
        case 2:
            return {
                {0, {{Z::J, 1.5}}, {{Z::Gminus, O::muS2, M::two_n_plus_1}}},
                {1,
                 {{Z::J, 1.5}},
                 {{Z::J, O::muS2, M::two_n_plus_1},
                  {Z::Gplus, O::muS2, M::two_n_plus_1},
                  {Z::Gminus, O::muS2, M::two_n_plus_1}}},
                // The J family is listed twice in this degree.
                {2,
                 {{Z::J, 0.5}},
                 {{Z::J, O::muS2, M::two_n_plus_1},
                  {Z::Gplus, O::muS2, M::two_n_plus_1},
                  {Z::J, O::muS2, M::two_n_plus_1}}},
                {3, {{Z::J, 0.5}}, {{Z::J, O::muS2, M::two_n_plus_1}}},
            };
        case 3:
            return {
                {0, {{Z::J, 2.0}}, {{Z::Tminus, O::mu0, M::n_plus_1_squared}}},
                {1,
                 {{Z::J, 2.0}},
                 {{Z::Jprime, O::mu1, M::two_n_n_plus_2},
                  {Z::Tminus, O::mu0, M::n_plus_1_squared},
                  {Z::J, O::mu0, M::n_plus_1_squared}}},
                {2,
                 {},
                 {{Z::Tplus, O::mu0, M::n_plus_1_squared},
                  {Z::Jprime, O::mu1, M::two_n_n_plus_2},
                  {Z::J, O::mu1, M::two_n_n_plus_2},
                  {Z::J, O::mu0, M::n_plus_1_squared}}},
                {3,
                 {{Z::J, 1.0}},
                 {{Z::Tplus, O::mu0, M::n_plus_1_squared},
                  {Z::J, O::mu0, M::n_plus_1_squared},
                  {Z::J, O::mu1, M::two_n_n_plus_2}}},
                {4, {{Z::J, 1.0}}, {{Z::J, O::mu0, M::n_plus_1_squared}}},
            };
        default: throw unsupported_error("spectrum tables exist for dim 1, 2, 3");
    }
}

// ---------------------------------------------------------------- shifted sphere zetas

enum class SphereZeta {
    S3,  // sum_{n>=1} (n+1)^2 (n(n+2) + q)^(-s)
    S2,  // sum_{n>=1} (2n+1) (n(n+1) + q)^(-s)
};

namespace detail {
// Binomial coefficient C(-s, j) as a jet in eps = s - s0.
inline Jet4 binomial_minus_s(double s0, int j) {
    Jet4 s = Jet4::variable(s0);
    Jet4 r(1.0);
    for (int i = 0; i < j; ++i) r = r * (-s - static_cast<double>(i)) / static_cast<double>(i + 1);
    return r;
}

inline double laurent_size(const Laurent& l) {
    double m = std::abs(l.residue);
    for (double c : l.regular.c) m = std::max(m, std::abs(c));
    return m;
}
}  // namespace detail

// Laurent data of the shifted sphere zeta at s0, in eps = s - s0.
// Writing the eigenvalues as k^2 + c (k = n+1 for S3, k = n+1/2 for S2), the
// first terms are summed directly and the rest by the binomial series
// sum_j C(-s,j) c^j zeta_H(2s + 2j - d, k_M), d = 2 (S3) or 1 (S2).
inline Laurent sphere_zeta_laurent(SphereZeta which, double s0, double q) {
    if (!(q >= 0.0)) throw domain_error("sphere zeta shift must be >= 0");
    const bool s3 = which == SphereZeta::S3;
    if (s3 && !(q < 3.0)) throw domain_error("S3 shift must be below the first eigenvalue 3");
    const double k0 = s3 ? 2.0 : 1.5;
    const double c = s3 ? q - 1.0 : q - 0.25;
    constexpr int direct = 2;
    const Jet4 s = Jet4::variable(s0);

    Laurent total;
    for (int i = 0; i < direct; ++i) {
        const double k = k0 + i;
        const double w = s3 ? k * k : 2.0 * k;
        total.regular += w * exp(-s * std::log(k * k + c));
    }
    const double km = k0 + direct;
    const double shift = s3 ? 2.0 : 1.0;
    const double weight = s3 ? 1.0 : 2.0;
    int small = 0;
    double cj = 1.0;
    for (int j = 0; j < 400; ++j, cj *= c) {
        const double sigma0 = 2.0 * s0 + 2.0 * j - shift;
        Laurent h = hurwitz_laurent(sigma0, km).rescaled(2.0);
        Laurent term = h * (detail::binomial_minus_s(s0, j) * (weight * cj));
        total += term;
        const double sz = detail::laurent_size(term);
        const double ref = std::max(1e-300, detail::laurent_size(total));
        small = (j >= 2 && sz <= 1e-18 * ref) ? small + 1 : 0;
        if (small >= 3 || cj == 0.0) return total;
    }
    throw convergence_error("binomial tail of the sphere zeta did not converge");
}

inline double zeta_sphere3(double s, double q) {
    Laurent l = sphere_zeta_laurent(SphereZeta::S3, s, q);
    if (l.has_pole()) throw pole_error("zeta_sphere3 has a pole at s = " + std::to_string(s));
    return l.finite_part();
}

inline double zeta_sphere2(double s, double q) {
    Laurent l = sphere_zeta_laurent(SphereZeta::S2, s, q);
    if (l.has_pole()) throw pole_error("zeta_sphere2 has a pole at s = " + std::to_string(s));
    return l.finite_part();
}

// zeta(t, L_q) = sum (n+1)^2 (n(n+2) + q)^(-t/2), as a Laurent series in t.
inline Laurent zeta_L_laurent(double t0, double q) {
    return sphere_zeta_laurent(SphereZeta::S3, 0.5 * t0, q).rescaled(0.5);
}

inline double zeta_L(double t, double q) {
    Laurent l = zeta_L_laurent(t, q);
    if (l.has_pole()) throw pole_error("zeta(t, L_q) has a pole at t = " + std::to_string(t));
    return l.finite_part();
}

// ---------------------------------------------------------------- U1

inline Laurent zeta_U1_laurent(double t0, double nu) {
    if (!(nu >= 1.0)) throw domain_error("zeta_U1 needs nu >= 1");
    Jet4 scale = exp(-Jet4::variable(t0) * std::log(nu));
    return (riemann_laurent(t0 - 2.0) - riemann_laurent(t0)) * scale;
}

// zeta(s, U1) = nu^(-s) (zeta_R(s-2) - zeta_R(s)).
inline double zeta_U1(double s, double nu) {
    if (s == 1.0 || s == 3.0) throw pole_error("zeta_U1 has poles at s = 1 and s = 3");
    return zeta_U1_laurent(s, nu).finite_part();
}

inline std::vector<MeromorphicValue> residues_U1(double nu) {
    std::vector<MeromorphicValue> out;
    for (double s0 : {1.0, 3.0}) {
        Laurent l = zeta_U1_laurent(s0, nu);
        out.push_back({l.residue, l.finite_part(), s0});
    }
    return out;
}

// ---------------------------------------------------------------- base sequences

// Positive integers t where zeta(t, U) has a pole, U = {m(n) : mu(n)}.
inline std::vector<int> zeta_poles(OrderKind kind) {
    switch (kind) {
        case OrderKind::mu0:
        case OrderKind::mu1: return {1, 3};
        case OrderKind::muS2: return {2};
        case OrderKind::muS1: return {1};
    }
    return {};
}

inline bool zeta_has_pole(OrderKind kind, int t) {
    for (int p : zeta_poles(kind))
        if (p == t) return true;
    return false;
}

// Decomposition length: the largest h with sigma_h = h - 1 not above the
// rightmost pole, plus one.
inline int decomposition_length(OrderKind kind) {
    switch (kind) {
        case OrderKind::mu0:
        case OrderKind::mu1: return 4;
        case OrderKind::muS2: return 3;
        case OrderKind::muS1: return 2;
    }
    return 0;
}

// The simple sequence U = {m(n) : mu(n)} underlying a family of double
// sequences, with its zeta function zeta(t, U) = sum m(n) mu(n)^(-t).
class BaseSequence {
public:
    BaseSequence(OrderKind kind, double nu) : order_{kind, nu} {
        if (!(nu >= 1.0) || !std::isfinite(nu)) throw domain_error("base sequence needs nu >= 1");
    }

    OrderKind kind() const { return order_.kind; }
    double nu() const { return order_.nu; }
    double u(long n) const { return order_(n); }

    Multiplicity multiplicity() const {
        switch (order_.kind) {
            case OrderKind::mu0: return Multiplicity::n_plus_1_squared;
            case OrderKind::mu1: return Multiplicity::n_n_plus_2;
            case OrderKind::muS2: return Multiplicity::two_n_plus_1;
            case OrderKind::muS1: return Multiplicity::one;
        }
        return Multiplicity::one;
    }
    double mult(long n) const { return multiplicity_value(multiplicity(), n); }
    // Growth degree of m(n) in n.
    int mult_degree() const {
        switch (order_.kind) {
            case OrderKind::mu0:
            case OrderKind::mu1: return 2;
            case OrderKind::muS2: return 1;
            case OrderKind::muS1: return 0;
        }
        return 0;
    }

    // Laurent data of zeta(t, U) at an integer t0, in eps = t - t0.
    Laurent zeta_laurent(int t0) const {
        const double t = static_cast<double>(t0);
        const double nu = order_.nu;
        const Jet4 scale = exp(-Jet4::variable(t) * std::log(nu));
        switch (order_.kind) {
            case OrderKind::mu1: return zeta_U1_laurent(t, nu);
            case OrderKind::mu0:
                return sphere_zeta_laurent(SphereZeta::S3, 0.5 * t, 1.0 / (nu * nu)).rescaled(0.5) * scale;
            case OrderKind::muS2:
                return sphere_zeta_laurent(SphereZeta::S2, 0.5 * t, 0.25 / (nu * nu)).rescaled(0.5) * scale;
            case OrderKind::muS1: return riemann_laurent(t) * scale;
        }
        return {};
    }

    std::vector<int> poles() const { return zeta_poles(order_.kind); }
    bool is_pole(int t) const { return zeta_has_pole(order_.kind, t); }

private:
    OrderMap order_;
};

// ---------------------------------------------------------------- quadratic Bessel zeta

struct ZetaAtZero {
    double value;
    double derivative;
};

// z(s, nu, q, l) = sum_k (j_{nu,k}^2 / l^2 + q^2)^(-s) at s = 0.
// nu = 0 is accepted; the cone over S^1 needs it.
inline ZetaAtZero bessel_quadratic_zeta_at0(double nu, double q, double l) {
    if (!(nu >= 0.0) || !std::isfinite(nu)) throw domain_error("order must be >= 0");
    if (!(q >= 0.0) || !std::isfinite(q)) throw domain_error("q must be >= 0");
    if (!(l > 0.0) || !std::isfinite(l)) throw domain_error("l must be positive");
    ZetaAtZero r{};
    r.value = -0.5 * (nu + 0.5);
    if (l * q < 1e-8) {
        r.derivative = -0.5 * std::log(pi) - (nu + 0.5) * std::log(l) + (nu - 0.5) * std::log(2.0) +
                       std::lgamma(nu + 1.0);
    } else {
        r.derivative = -0.5 * std::log(2.0 * pi * l) - log_bessel_i(nu, l * q) + nu * std::log(q);
    }
    return r;
}

}  // namespace conetorsion
