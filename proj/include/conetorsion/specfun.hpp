#pragma once

// Gamma, Hurwitz/Riemann zeta with derivatives and Laurent data, Bessel
// J (Boost-backed), Bessel I by power series or Olver's uniform expansion,
// zeros of Bessel-type functions, and the uniform-expansion polynomials.

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <vector>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/bessel_prime.hpp>

#include "conetorsion/error.hpp"
#include "conetorsion/jet.hpp"
#include "conetorsion/rational.hpp"
#include "conetorsion/summation.hpp"

namespace conetorsion {

constexpr double pi = 3.14159265358979323846264338327950288;
constexpr double euler_gamma = 0.57721566490153286060651209008240243;

// ---------------------------------------------------------------- gamma

namespace detail {
inline bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }
}  // namespace detail

inline double gamma(double x) {
    if (detail::is_nonpositive_integer(x)) throw pole_error("gamma has a pole at " + std::to_string(x));
    return std::tgamma(x);
}

inline double log_gamma(double x) {
    if (detail::is_nonpositive_integer(x)) throw pole_error("gamma has a pole at " + std::to_string(x));
    return std::lgamma(x);
}

// Lanczos approximation (g = 7, n = 9) with reflection.
inline std::complex<double> log_gamma(std::complex<double> z) {
    if (z.imag() == 0.0 && detail::is_nonpositive_integer(z.real()))
        throw pole_error("gamma has a pole at " + std::to_string(z.real()));
    static constexpr std::array<double, 9> c = {
        0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
        771.32342877765313,   -176.61502916214059,   12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    if (z.real() < 0.5) {
        // log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z)
        return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma(1.0 - z);
    }
    std::complex<double> w = z - 1.0;
    std::complex<double> a = c[0];
    for (int i = 1; i < 9; ++i) a += c[i] / (w + static_cast<double>(i));
    std::complex<double> t = w + 7.5;
    return 0.5 * std::log(2.0 * pi) + (w + 0.5) * std::log(t) - t + std::log(a);
}

inline std::complex<double> gamma(std::complex<double> z) { return std::exp(log_gamma(z)); }

// ---------------------------------------------------------------- zeta

namespace detail {
// B_{2j} / (2j)! for j = 1..15.
inline const std::array<double, 15>& bernoulli_over_factorial() {
    static const std::array<double, 15> t = [] {
        const std::array<double, 15> b = {1.0 / 6,
                                          -1.0 / 30,
                                          1.0 / 42,
                                          -1.0 / 30,
                                          5.0 / 66,
                                          -691.0 / 2730,
                                          7.0 / 6,
                                          -3617.0 / 510,
                                          43867.0 / 798,
                                          -174611.0 / 330,
                                          854513.0 / 138,
                                          -236364091.0 / 2730,
                                          8553103.0 / 6,
                                          -23749461029.0 / 870,
                                          8615841276005.0 / 14322};
        std::array<double, 15> r{};
        double f = 1.0;
        for (int j = 1; j <= 15; ++j) {
            f *= (2.0 * j - 1.0) * (2.0 * j);
            r[j - 1] = b[j - 1] / f;
        }
        return r;
    }();
    return t;
}

// Euler-Maclaurin pieces for sum_{k>=0} (a+k)^(-sigma):
// direct sum to N-1, the half term and the Bernoulli corrections at X = a+N.
inline Jet4 hurwitz_em_body(const Jet4& sigma, double a, int n_direct) {
    Jet4 s(0.0);
    for (int k = 0; k < n_direct; ++k) s += pow(a + k, -sigma);
    const double x = a + n_direct;
    s += 0.5 * pow(x, -sigma);
    const auto& bf = bernoulli_over_factorial();
    Jet4 rising = sigma;  // sigma (sigma+1) ... (sigma+2j-2)
    for (int j = 1; j <= 15; ++j) {
        s += bf[j - 1] * rising * pow(x, 1.0 - sigma - 2.0 * j);
        rising = rising * (sigma + (2.0 * j - 1.0)) * (sigma + 2.0 * j);
    }
    return s;
}

// Number of direct terms so that the Euler-Maclaurin cut X = a + N is large
// enough for the Bernoulli series but small enough to limit cancellation
// against X^(1-sigma) when sigma < 1.
inline int hurwitz_direct_terms(double sigma0, double a) {
    const double target = sigma0 < 1.0 ? 4.0 + 0.5 * std::min(40.0, 1.0 - sigma0) : 12.0;
    return std::max(0, static_cast<int>(std::ceil(target - a)));
}
}  // namespace detail

// Hurwitz zeta sum_{k>=0} (a+k)^(-sigma) for a jet argument away from sigma = 1.
inline Jet4 hurwitz_zeta(const Jet4& sigma, double a) {
    if (!(a > 0.0)) throw domain_error("hurwitz zeta needs a > 0");
    if (sigma.value() == 1.0) throw pole_error("hurwitz zeta has a pole at 1");
    const int n = detail::hurwitz_direct_terms(sigma.value(), a);
    Jet4 s = detail::hurwitz_em_body(sigma, a, n);
    s += pow(a + n, 1.0 - sigma) / (sigma - 1.0);
    return s;
}

// Laurent expansion of the Hurwitz zeta at sigma0 in eps = sigma - sigma0.
inline Laurent hurwitz_laurent(double sigma0, double a) {
    if (sigma0 != 1.0) return Laurent(hurwitz_zeta(Jet4::variable(sigma0), a));
    const int n = detail::hurwitz_direct_terms(1.0, a);
    const double lx = std::log(a + n);
    Jet4 sigma = Jet4::variable(1.0);
    Jet4 reg = detail::hurwitz_em_body(sigma, a, n);
    // ((a+N)^(1-sigma) - 1)/(sigma - 1) = -lx * exprel(-eps * lx)
    Jet4 x = Jet4::variable(0.0) * (-lx);
    reg -= lx * exprel_nilpotent(x);
    return {1.0, reg};
}

inline double hurwitz_zeta(double s, double a) { return hurwitz_zeta(Jet4(s), a).value(); }

inline double riemann_zeta(double s) {
    if (s == 1.0) throw pole_error("riemann zeta has a pole at s = 1");
    return hurwitz_zeta(Jet4::variable(s), 1.0).value();
}

inline double riemann_zeta_deriv(double s) {
    if (s == 1.0) throw pole_error("riemann zeta has a pole at s = 1");
    return hurwitz_zeta(Jet4::variable(s), 1.0)[1];
}

inline Laurent riemann_laurent(double s0) { return hurwitz_laurent(s0, 1.0); }

// ---------------------------------------------------------------- Bessel J

inline void check_bessel_args(double nu, double x) {
    if (!(nu >= 0.0) || !std::isfinite(nu)) throw domain_error("bessel order must be finite and >= 0");
    if (!(x >= 0.0) || !std::isfinite(x)) throw domain_error("bessel argument must be finite and >= 0");
}

inline double bessel_j(double nu, double x) {
    check_bessel_args(nu, x);
    return boost::math::cyl_bessel_j(nu, x);
}

inline double bessel_j_prime(double nu, double x) {
    check_bessel_args(nu, x);
    if (x == 0.0) {
        if (nu == 1.0) return 0.5;
        if (nu == 0.0 || nu > 1.0) return 0.0;
        throw overflow_error("J'_nu(0) is infinite for 0 < nu < 1");
    }
    return boost::math::cyl_bessel_j_prime(nu, x);
}

// ---------------------------------------------------------------- uniform expansion polynomials

namespace detail {
// Coefficients (in powers of p) of Olver's u_k and v_k, k = 0..K-1, in double.
// u_{k+1} = p^2 (1-p^2) u_k'/2 + (1/8) int_0^p (1 - 5t^2) u_k(t) dt
// v_k = u_k + p (p^2 - 1) (u_{k-1}/2 + p u_{k-1}')
struct OlverTables {
    static constexpr int K = 15;
    std::array<std::vector<double>, K> u;
    std::array<std::vector<double>, K> v;

    OlverTables() {
        u[0] = {1.0};
        v[0] = {1.0};
        for (int k = 0; k + 1 < K; ++k) {
            const auto& c = u[k];
            std::vector<double> n(c.size() + 3, 0.0);
            for (std::size_t i = 1; i < c.size(); ++i) {
                double d = static_cast<double>(i) * c[i];  // coefficient of p^(i-1) in u_k'
                n[i + 1] += 0.5 * d;
                n[i + 3] -= 0.5 * d;
            }
            for (std::size_t i = 0; i < c.size(); ++i) {
                n[i + 1] += c[i] / (8.0 * static_cast<double>(i + 1));
                n[i + 3] -= 5.0 * c[i] / (8.0 * static_cast<double>(i + 3));
            }
            u[k + 1] = n;
        }
        for (int k = 1; k < K; ++k) {
            std::vector<double> r = u[k];
            const auto& c = u[k - 1];
            r.resize(std::max(r.size(), c.size() + 3), 0.0);
            // g = u_{k-1}/2 + p u_{k-1}' has coefficient (1/2 + i) c_i at p^i
            for (std::size_t i = 0; i < c.size(); ++i) {
                double g = (0.5 + static_cast<double>(i)) * c[i];
                r[i + 3] += g;
                r[i + 1] -= g;
            }
            v[k] = r;
        }
    }
};

inline const OlverTables& olver_tables() {
    static const OlverTables t;
    return t;
}

inline double horner(const std::vector<double>& c, double p) {
    double s = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * p + *it;
    return s;
}
}  // namespace detail

struct UVPair {
    AsymptoticPolynomial U;
    AsymptoticPolynomial V;
};

namespace detail {
inline std::vector<UVPair> exact_uv(int kmax) {
    std::vector<UVPair> out;
    AsymptoticPolynomial u(Rational(1));
    out.push_back({u, u});
    const AsymptoticPolynomial p = AsymptoticPolynomial::monomial(1);
    const AsymptoticPolynomial p2 = AsymptoticPolynomial::monomial(2);
    const AsymptoticPolynomial one(Rational(1));
    for (int k = 1; k <= kmax; ++k) {
        const AsymptoticPolynomial& prev = out.back().U;
        AsymptoticPolynomial next = Rational(1, 2) * p2 * (one - p2) * prev.derivative() +
                                    Rational(1, 8) * ((one - Rational(5) * p2) * prev).integral();
        AsymptoticPolynomial v =
            next + p * (p2 - one) * (Rational(1, 2) * prev + p * prev.derivative());
        out.push_back({next, v});
    }
    return out;
}
}  // namespace detail

// U_k and V_k as exact rational polynomials in p = (1 + z^2)^(-1/2).
inline UVPair uv_coefficients(int k) {
    if (k < 1 || k > 3) throw unsupported_error("uv_coefficients supports orders 1..3");
    static const std::vector<UVPair> table = detail::exact_uv(3);
    return table[static_cast<std::size_t>(k)];
}

enum class Sign { plus, minus };

// W_{k,+-} = V_k +- w p U_{k-1}, with U_0 = 1.
inline AsymptoticPolynomial w_coefficients(int k, Sign sign, Rational weight) {
    if (weight != Rational(1) && weight != Rational(1, 2))
        throw unsupported_error("w_coefficients supports weight 1 or 1/2");
    const int kmax = (weight == Rational(1)) ? 3 : 2;
    if (k < 1 || k > kmax) throw unsupported_error("w_coefficients order out of range");
    AsymptoticPolynomial prev_u = (k == 1) ? AsymptoticPolynomial(Rational(1)) : uv_coefficients(k - 1).U;
    AsymptoticPolynomial shift = AsymptoticPolynomial::monomial(1, weight) * prev_u;
    AsymptoticPolynomial v = uv_coefficients(k).V;
    return sign == Sign::plus ? v + shift : v - shift;
}

// ---------------------------------------------------------------- Bessel I

// Olver's expansion is used from this order on; below it the power series.
constexpr double kOlverOrderThreshold = 25.0;

namespace detail {
// log of sum_k (x^2/4)^k / (k! Gamma(k+nu+1)), summed outward from the largest term.
inline double log_bessel_i_series_sum(double nu, double x) {
    const double q = 0.25 * x * x;
    const double root = 0.5 * (-(nu + 2.0) + std::sqrt(nu * nu + 4.0 * q));
    const double kstar = std::max(0.0, std::ceil(root));
    const double log_tmax = kstar * std::log(q) - std::lgamma(kstar + 1.0) - std::lgamma(kstar + nu + 1.0);
    CompensatedSum s;
    s.add(1.0);
    double t = 1.0;
    for (double k = kstar;; k += 1.0) {
        t *= q / ((k + 1.0) * (k + nu + 1.0));
        s.add(t);
        if (t < 1e-18 * s.value()) break;
        if (k - kstar > 1e7) throw convergence_error("bessel I series did not converge");
    }
    t = 1.0;
    for (double k = kstar; k > 0.0; k -= 1.0) {
        t *= k * (k + nu) / q;
        s.add(t);
        if (t < 1e-18 * s.value()) break;
    }
    return log_tmax + std::log(s.value());
}
}  // namespace detail


// log I_nu(x) and log I'_nu(x) for real x > 0. Power series for nu below
// kOlverOrderThreshold, Olver's uniform expansion (14 correction terms) above.
inline double log_bessel_i(double nu, double x) {
    check_bessel_args(nu, x);
    if (x == 0.0) return nu == 0.0 ? 0.0 : -std::numeric_limits<double>::infinity();
    if (nu >= kOlverOrderThreshold) {
        const auto& t = detail::olver_tables();
        const double z = x / nu;
        const double sq = std::sqrt(1.0 + z * z);
        const double eta = sq + std::log(z / (1.0 + sq));
        const double p = 1.0 / sq;
        double s = 0.0, f = 1.0;
        for (int k = 0; k < detail::OlverTables::K; ++k, f /= nu) s += detail::horner(t.u[k], p) * f;
        return nu * eta - 0.5 * std::log(2.0 * pi * nu) - 0.5 * std::log(sq) + std::log(s);
    }
    return nu * std::log(0.5 * x) + detail::log_bessel_i_series_sum(nu, x);
}

inline double log_bessel_i_prime(double nu, double x) {
    check_bessel_args(nu, x);
    if (x == 0.0) {
        if (nu == 1.0) return std::log(0.5);
        if (nu == 0.0 || nu > 1.0) return -std::numeric_limits<double>::infinity();
        return std::numeric_limits<double>::infinity();
    }
    if (nu >= kOlverOrderThreshold) {
        const auto& t = detail::olver_tables();
        const double z = x / nu;
        const double sq = std::sqrt(1.0 + z * z);
        const double eta = sq + std::log(z / (1.0 + sq));
        const double p = 1.0 / sq;
        double s = 0.0, f = 1.0;
        for (int k = 0; k < detail::OlverTables::K; ++k, f /= nu) s += detail::horner(t.v[k], p) * f;
        return nu * eta - 0.5 * std::log(2.0 * pi * nu) + 0.5 * std::log(sq) - std::log(z) + std::log(s);
    }
    // I' = I_{nu+1} + (nu/x) I_nu, both terms positive.
    const double li = log_bessel_i(nu, x);
    const double ratio = std::exp(log_bessel_i(nu + 1.0, x) - li);
    return li + std::log(ratio + nu / x);
}

inline double bessel_i(double nu, double x) {
    double l = log_bessel_i(nu, x);
    if (l > 709.0) throw overflow_error("I_nu(x) overflows; use log_bessel_i");
    return std::exp(l);
}

inline double bessel_i_prime(double nu, double x) {
    double l = log_bessel_i_prime(nu, x);
    if (l > 709.0) throw overflow_error("I'_nu(x) overflows; use log_bessel_i_prime");
    return std::exp(l);
}

// Complex argument with Re x > 0: direct power series, |x| <= 500.
// Returns log of sum_k (x^2/4)^k Gamma(nu+1)/(k! Gamma(k+nu+1)), i.e.
// I_nu(x) = (x/2)^nu / Gamma(nu+1) * exp(result).
inline std::complex<double> log_bessel_i_normalized(double nu, std::complex<double> x) {
    if (std::abs(x) > 500.0) throw domain_error("complex bessel I limited to |x| <= 500");
    const std::complex<double> q = 0.25 * x * x;
    std::complex<double> s = 1.0, t = 1.0;
    for (int k = 0; k < 100000; ++k) {
        t *= q / ((k + 1.0) * (k + nu + 1.0));
        s += t;
        if (std::abs(t) < 1e-18 * std::abs(s) && static_cast<double>(k) > std::abs(x)) return std::log(s);
    }
    throw convergence_error("complex bessel I series did not converge");
}

inline std::complex<double> log_bessel_i(double nu, std::complex<double> x) {
    if (x.imag() == 0.0 && x.real() > 0.0) return log_bessel_i(nu, x.real());
    return nu * std::log(0.5 * x) - std::lgamma(nu + 1.0) + log_bessel_i_normalized(nu, x);
}

// x I'_nu(x) / I_nu(x) for complex x.
inline std::complex<double> bessel_i_log_derivative(double nu, std::complex<double> x) {
    if (x.imag() == 0.0 && x.real() > 0.0)
        return x.real() * std::exp(log_bessel_i_prime(nu, x.real()) - log_bessel_i(nu, x.real()));
    // I' = I_{nu+1} + (nu/x) I_nu
    std::complex<double> r =
        (0.5 * x / (nu + 1.0)) * std::exp(log_bessel_i_normalized(nu + 1.0, x) - log_bessel_i_normalized(nu, x));
    return x * r + nu;
}

// ---------------------------------------------------------------- zeros

enum class ZeroKind { J, Jprime, Tplus, Tminus, Gplus, Gminus };

inline std::string to_string(ZeroKind k) {
    switch (k) {
        case ZeroKind::J: return "J";
        case ZeroKind::Jprime: return "Jprime";
        case ZeroKind::Tplus: return "Tplus";
        case ZeroKind::Tminus: return "Tminus";
        case ZeroKind::Gplus: return "Gplus";
        case ZeroKind::Gminus: return "Gminus";
    }
    return "?";
}

// c in c J_nu(z) + z J'_nu(z); J itself is handled separately.
inline double zero_kind_coefficient(ZeroKind k) {
    switch (k) {
        case ZeroKind::Jprime: return 0.0;
        case ZeroKind::Tplus: return 1.0;
        case ZeroKind::Tminus: return -1.0;
        case ZeroKind::Gplus: return 0.5;
        case ZeroKind::Gminus: return -0.5;
        case ZeroKind::J: break;
    }
    return 0.0;
}

// The function whose positive zeros find_zeros returns. For Jprime this is
// z J'_nu(z), which has the same positive zeros as J'_nu.
inline double zero_target(ZeroKind kind, double nu, double z) {
    if (kind == ZeroKind::J) return bessel_j(nu, z);
    return zero_kind_coefficient(kind) * bessel_j(nu, z) + z * bessel_j_prime(nu, z);
}

constexpr int kZeroIterationCap = 100;

namespace detail {
// Safeguarded Newton on [lo, hi] with f(lo) f(hi) < 0.
template <class F, class DF>
double bracketed_newton(F f, DF df, double lo, double hi) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0) == (fhi > 0)) throw convergence_error("zero bracket has no sign change");
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < kZeroIterationCap; ++it) {
        double fx = f(x);
        if (fx == 0.0) return x;
        if ((fx > 0) == (flo > 0)) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
        }
        double d = df(x);
        double xn = (d != 0.0) ? x - fx / d : 0.5 * (lo + hi);
        if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
        if (std::abs(xn - x) <= 2e-16 * std::abs(x) || hi - lo <= 4e-16 * std::abs(x)) return xn;
        x = xn;
    }
    throw convergence_error("zero refinement exceeded the iteration cap");
}

inline std::vector<double> bessel_j_zeros(double nu, int count) {
    auto f = [nu](double z) { return boost::math::cyl_bessel_j(nu, z); };
    auto df = [nu](double z) { return boost::math::cyl_bessel_j_prime(nu, z); };
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    // No zero of J_nu lies below max(nu, 2.4) for nu >= 0; scan from a bit below.
    double a = std::max(0.1, nu);
    double fa = f(a);
    const double step = 0.25;
    auto scan = [&](double from, double fv) {
        double b = from;
        double fb = fv;
        for (int guard = 0; guard < 4000000; ++guard) {
            double c = b + step;
            double fc = f(c);
            if ((fc > 0) != (fb > 0) || fc == 0.0) return std::pair<double, double>{b, c};
            b = c;
            fb = fc;
        }
        throw convergence_error("no sign change found while scanning for a bessel zero");
    };
    while (static_cast<int>(out.size()) < count) {
        double lo = 0.0, hi = 0.0;
        std::size_t n = out.size();
        bool bracketed = false;
        if (n >= 2) {
            // Spacing varies monotonically and tends to pi.
            double d = out[n - 1] - out[n - 2];
            lo = out[n - 1] + std::min(d, pi) - 0.1;
            hi = out[n - 1] + std::max(d, pi) + 0.1;
            double fl = f(lo), fh = f(hi);
            bracketed = (fl > 0) != (fh > 0);
        }
        if (!bracketed) {
            auto br = scan(a, fa);
            lo = br.first;
            hi = br.second;
        }
        double z = bracketed_newton(f, df, lo, hi);
        out.push_back(z);
        a = z + 0.05;
        fa = f(a);
    }
    return out;
}
}  // namespace detail

// First `count` positive zeros, strictly increasing. Zeros of c J + z J' are
// bracketed by consecutive zeros of J_nu (one per interval, plus one below the
// first J zero when nu + c > 0) and refined by safeguarded Newton.
inline std::vector<double> find_zeros(ZeroKind kind, double nu, int count) {
    if (count < 1) throw domain_error("find_zeros needs count >= 1");
    if (!(nu >= 0.0) || !std::isfinite(nu)) throw domain_error("find_zeros needs a finite order nu >= 0");
    if (kind == ZeroKind::Tminus && !(nu > 1.0))
        throw domain_error("Tminus zeros need nu > 1 (for nu <= 1 the first zero is not positive real)");
    if (kind == ZeroKind::Gminus && !(nu > 0.5))
        throw domain_error("Gminus zeros need nu > 1/2 (for nu <= 1/2 the first zero is not positive real)");
    if (kind == ZeroKind::J) return detail::bessel_j_zeros(nu, count);

    const double c = zero_kind_coefficient(kind);
    const bool has_low_zero = nu + c > 0.0;
    std::vector<double> jz = detail::bessel_j_zeros(nu, count + 1);
    auto h = [&](double z) { return c * bessel_j(nu, z) + z * bessel_j_prime(nu, z); };
    // d/dz (c J + z J') = c J' - (z - nu^2/z) J
    auto dh = [&](double z) { return c * bessel_j_prime(nu, z) - (z - nu * nu / z) * bessel_j(nu, z); };

    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    if (has_low_zero) {
        // On (0, j_1), c + z J'/J decreases from nu + c to -infinity.
        double lo = (nu > 0.0) ? 0.9 * nu : 0.5 * jz[0];
        for (int guard = 0; guard < 2000; ++guard) {
            double j = bessel_j(nu, lo);
            if (j > 0.0 && c + lo * bessel_j_prime(nu, lo) / j > 0.0) break;
            lo *= 0.5;
            if (lo < 1e-300) throw convergence_error("could not bracket the first zero");
        }
        out.push_back(detail::bracketed_newton(h, dh, lo, jz[0]));
    }
    for (std::size_t k = 0; static_cast<int>(out.size()) < count; ++k)
        out.push_back(detail::bracketed_newton(h, dh, jz[k], jz[k + 1]));
    return out;
}

}  // namespace conetorsion
