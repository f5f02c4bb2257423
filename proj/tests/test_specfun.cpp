#include <catch_amalgamated.hpp>

#include <cmath>

#include "conetorsion/specfun.hpp"

using namespace conetorsion;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

// Reference values below were computed at 30 digits with mpmath.

TEST_CASE("Hurwitz zeta matches reference values", "[specfun]") {
    struct Case {
        double s, a, expected;
    };
    const Case cases[] = {
        {-2.5, 1.7, -0.40596110194108211}, {0.5, 2.0, -2.4603545088095868},   {3.0, 0.25, 64.66386996876846},
        {-0.5, 1.0, -0.20788622497735457}, {1.5, 10.0, 0.64866163194157042},  {-3.7, 0.6, -0.0046862288872212314},
        {7.2, 1.3, 0.15392706157564685},
    };
    for (const auto& c : cases) {
        INFO("s = " << c.s << ", a = " << c.a);
        CHECK_THAT(hurwitz_zeta(c.s, c.a), WithinRel(c.expected, 1e-11) || WithinAbs(c.expected, 1e-12));
    }
}

TEST_CASE("Hurwitz zeta derivatives from jets", "[specfun]") {
    CHECK_THAT(riemann_zeta_deriv(-2.0), WithinAbs(-0.030448457058393271, 1e-13));
    CHECK_THAT(riemann_zeta_deriv(0.0), WithinAbs(-0.91893853320467274, 1e-13));
    CHECK_THAT(hurwitz_zeta(Jet4::variable(0.3), 2.5).c[1], WithinAbs(-1.7197298420007728, 1e-12));
    // zeta'(0, a) = log Gamma(a) - log(2 pi)/2
    for (double a : {0.3, 1.0, 2.75, 9.0})
        CHECK_THAT(hurwitz_zeta(Jet4::variable(0.0), a).c[1], WithinAbs(std::lgamma(a) - 0.5 * std::log(2 * pi), 1e-13));
}

TEST_CASE("Hurwitz zeta pole at s = 1", "[specfun]") {
    const Laurent l = hurwitz_laurent(1.0, 2.0);
    CHECK_THAT(l.residue, WithinAbs(1.0, 1e-15));
    // finite part is -psi(a)
    CHECK_THAT(l.finite_part(), WithinAbs(-(1.0 - euler_gamma), 1e-12));
    CHECK_THROWS_AS(hurwitz_zeta(1.0, 2.0), pole_error);
}

TEST_CASE("Riemann zeta at integers", "[specfun]") {
    CHECK_THAT(riemann_zeta(2.0), WithinAbs(pi * pi / 6, 1e-14));
    CHECK_THAT(riemann_zeta(0.0), WithinAbs(-0.5, 1e-14));
    CHECK_THAT(riemann_zeta(-1.0), WithinAbs(-1.0 / 12, 1e-14));
    CHECK_THAT(riemann_zeta(-2.0), WithinAbs(0.0, 1e-14));
}

TEST_CASE("log I and its log derivative", "[specfun]") {
    struct Case {
        double nu, x, log_i, ratio;
    };
    const Case cases[] = {
        {0.5, 2.0, 0.71600242968946804, 0.7873147207275481},   {3.0, 0.1, -10.778331328947103, 30.012498437825444},
        {30.0, 45.0, 32.415832316793519, 1.1941781186591172},  {100.0, 1.0, -433.05161839406589, 100.00495037492096},
        {2.5, 200.0, 196.41686528494458, 0.99757537497144887}, {0.0, 5.0, 3.3046817758225334, 0.89338313704408522},
        {26.0, 3.0, -50.636399152143821, 8.7220578219636844},
    };
    for (const auto& c : cases) {
        INFO("nu = " << c.nu << ", x = " << c.x);
        CHECK_THAT(log_bessel_i(c.nu, c.x), WithinAbs(c.log_i, 1e-11 * std::max(1.0, std::abs(c.log_i))));
        CHECK_THAT(log_bessel_i_prime(c.nu, c.x) - log_bessel_i(c.nu, c.x),
                   WithinRel(std::log(c.ratio), 1e-10) || WithinAbs(std::log(c.ratio), 1e-12));
    }
}

TEST_CASE("log I on both sides of the uniform expansion threshold", "[specfun]") {
    struct Case {
        double nu, x, expected;
    };
    const double lo = kOlverOrderThreshold - 1e-9, hi = kOlverOrderThreshold + 1e-9;
    const Case cases[] = {
        {lo, 0.5, -92.658560507195383}, {lo, 10.0, -16.822502184313974}, {lo, 40.0, 29.571897604406677},
        {lo, 300.0, 295.18678613468469}, {hi, 0.5, -92.658560516445643}, {hi, 10.0, -16.822502187642917},
        {hi, 40.0, 29.571897603214976},  {hi, 300.0, 295.18678613451794},
    };
    for (const auto& c : cases) {
        INFO("nu = " << c.nu << ", x = " << c.x);
        CHECK_THAT(log_bessel_i(c.nu, c.x), WithinAbs(c.expected, 1e-12 * std::abs(c.expected)));
    }
}

TEST_CASE("Complex log I on the real axis", "[specfun]") {
    for (double nu : {0.5, 4.0, 40.0}) {
        const auto z = log_bessel_i(nu, std::complex<double>(3.0, 0.0));
        CHECK_THAT(z.real(), WithinAbs(log_bessel_i(nu, 3.0), 1e-11));
        CHECK_THAT(z.imag(), WithinAbs(0.0, 1e-12));
    }
}

TEST_CASE("Bessel zeros match reference values", "[specfun][zeros]") {
    CHECK_THAT(find_zeros(ZeroKind::J, 0.0, 1)[0], WithinAbs(2.4048255576957728, 1e-13));
    CHECK_THAT(find_zeros(ZeroKind::J, 1.0, 1)[0], WithinAbs(3.8317059702075123, 1e-13));
    CHECK_THAT(find_zeros(ZeroKind::J, 5.0, 1)[0], WithinAbs(8.771483815959954, 1e-13));
    CHECK_THAT(find_zeros(ZeroKind::J, 20.0, 50)[49], WithinAbs(186.63822688809299, 1e-11));
    CHECK_THAT(find_zeros(ZeroKind::J, 0.0, 50)[49], WithinAbs(156.29503426853352, 1e-11));
    CHECK_THAT(find_zeros(ZeroKind::J, 0.5, 3)[2], WithinAbs(3 * pi, 1e-13));
    CHECK_THAT(find_zeros(ZeroKind::Jprime, 1.0, 1)[0], WithinAbs(1.8411837813406593, 1e-13));
    CHECK_THAT(find_zeros(ZeroKind::Jprime, 2.0, 3)[2], WithinAbs(9.9694678230875958, 1e-12));
    CHECK_THAT(find_zeros(ZeroKind::Jprime, 5.0, 1)[0], WithinAbs(6.4156163757002403, 1e-13));
}

TEST_CASE("Zeros of every kind are roots and strictly increasing", "[specfun][zeros]") {
    for (ZeroKind k : {ZeroKind::J, ZeroKind::Jprime, ZeroKind::Tplus, ZeroKind::Tminus, ZeroKind::Gplus,
                       ZeroKind::Gminus}) {
        for (double nu : {1.5, 3.0, 12.0}) {
            const auto z = find_zeros(k, nu, 30);
            INFO(to_string(k) << " nu = " << nu);
            for (std::size_t i = 0; i < z.size(); ++i) {
                CHECK(std::abs(zero_target(k, nu, z[i])) < 1e-12 * std::max(1.0, z[i]));
                if (i > 0) CHECK(z[i] > z[i - 1]);
            }
        }
    }
}

TEST_CASE("Zero finder rejects unsupported orders", "[specfun][zeros]") {
    CHECK_THROWS_AS(find_zeros(ZeroKind::Tminus, 1.0, 3), domain_error);
    CHECK_THROWS_AS(find_zeros(ZeroKind::Gminus, 0.5, 3), domain_error);
    CHECK_THROWS_AS(find_zeros(ZeroKind::J, -1.0, 3), domain_error);
    CHECK_THROWS_AS(find_zeros(ZeroKind::J, 1.0, 0), domain_error);
}

TEST_CASE("Uniform expansion polynomials", "[specfun]") {
    using R = Rational;
    CHECK(uv_coefficients(1).U == AsymptoticPolynomial({{1, R(1, 8)}, {3, R(-5, 24)}}));
    CHECK(uv_coefficients(1).V == AsymptoticPolynomial({{1, R(-3, 8)}, {3, R(7, 24)}}));
    CHECK(uv_coefficients(2).U == AsymptoticPolynomial({{2, R(9, 128)}, {4, R(-77, 192)}, {6, R(385, 1152)}}));
    CHECK(uv_coefficients(2).V == AsymptoticPolynomial({{2, R(-15, 128)}, {4, R(33, 64)}, {6, R(-455, 1152)}}));
    CHECK(w_coefficients(1, Sign::plus, 1) == AsymptoticPolynomial({{1, R(5, 8)}, {3, R(7, 24)}}));
    CHECK(w_coefficients(1, Sign::minus, R(1, 2)) == AsymptoticPolynomial({{1, R(-7, 8)}, {3, R(7, 24)}}));
    // The double tables agree with the exact ones.
    const auto& t = detail::olver_tables();
    for (int k = 1; k <= 3; ++k)
        for (double p : {0.1, 0.6, 1.0}) CHECK_THAT(detail::horner(t.u[k], p), WithinAbs(uv_coefficients(k).U.eval_p(p), 1e-14));
}
