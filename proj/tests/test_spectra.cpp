#include <catch_amalgamated.hpp>

#include <boost/math/special_functions/trigamma.hpp>
#include <cmath>

#include "conetorsion/spectra.hpp"
#include "conetorsion/summation.hpp"

using namespace conetorsion;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// Residue at s0 from values on both sides, two Richardson steps.
template <class F>
double residue_fit(F f, double s0) {
    auto sym = [&](double h) { return 0.5 * h * (f(s0 + h) - f(s0 - h)); };
    const double a = sym(1e-2), b = sym(5e-3), c = sym(2.5e-3);
    const double ab = (4 * b - a) / 3, bc = (4 * c - b) / 3;
    return (16 * bc - ab) / 15;
}

// z'(0) of {j_{nu,k}^2/l^2 + q^2} from the zeros alone: the q = 0 part is
// regularized against beta_k = pi (k + nu/2 - 1/4), the rest is the product
// sum_k log(1 + x^2/j_k^2), x = q l. Both tails use the leading asymptotics.
double product_oracle(double nu, double q, double l, int count) {
    const auto j = find_zeros(ZeroKind::J, nu, count);
    const double c = 0.5 * nu - 0.25;
    const double x = q * l;
    CompensatedSum diff, prod;
    for (int k = 1; k <= count; ++k) {
        const double jk = j[static_cast<std::size_t>(k - 1)];
        diff += std::log(jk) - std::log(pi * (k + c));
        prod += std::log1p(x * x / (jk * jk));
    }
    const double trigamma = boost::math::trigamma(count + 1 + c);
    const double diff_tail = -(4 * nu * nu - 1) / (8 * pi * pi) * trigamma;
    const double prod_tail = x * x / (pi * pi) * trigamma;
    const Jet4 h = hurwitz_zeta(Jet4::variable(0.0), 1 + c);
    const double beta_part = -2 * std::log(pi) * h.c[0] + 2 * h.c[1];
    const double z0 = -0.5 * (nu + 0.5);
    return beta_part - 2 * (diff.value() + diff_tail) - (prod.value() + prod_tail) + 2 * std::log(l) * z0;
}

}  // namespace

TEST_CASE("Shifted sphere zeta values", "[spectra]") {
    CHECK_THAT(zeta_sphere3(2.5, 0.3), WithinRel(0.29047949834435943, 1e-12));
    CHECK_THAT(zeta_sphere3(3.0, 1.0), WithinRel(0.082323233711138192, 1e-12));
    CHECK_THAT(zeta_sphere3(2.2, 0.0), WithinRel(0.58127366097320814, 1e-12));
    CHECK_THAT(zeta_sphere2(1.7, 0.25), WithinRel(1.2799057605477104, 1e-12));
    CHECK_THAT(zeta_sphere2(2.5, 0.1), WithinRel(0.54782794239476731, 1e-12));
    CHECK_THAT(zeta_sphere2(3.0, 0.0), WithinRel(0.40411380631918857, 1e-12));
}

TEST_CASE("Sphere zeta poles", "[spectra]") {
    CHECK_THROWS_AS(zeta_sphere3(1.5, 0.2), pole_error);
    CHECK_THROWS_AS(zeta_sphere2(1.0, 0.2), pole_error);
    for (double q : {0.0, 0.4, 2.0}) {
        const Laurent a = sphere_zeta_laurent(SphereZeta::S3, 1.5, q);
        const Laurent b = sphere_zeta_laurent(SphereZeta::S3, 0.5, q);
        CHECK_THAT(a.residue, WithinAbs(0.5, 1e-12));
        CHECK_THAT(b.residue, WithinAbs((1 - q) / 4, 1e-12));
        CHECK_THAT(zeta_L_laurent(3.0, q).residue, WithinAbs(1.0, 1e-12));
        CHECK_THAT(zeta_L_laurent(1.0, q).residue, WithinAbs((1 - q) / 2, 1e-12));
        CHECK_THAT(residue_fit([&](double t) { return zeta_L(t, q); }, 1.0), WithinAbs((1 - q) / 2, 1e-8));
    }
    CHECK_THAT(sphere_zeta_laurent(SphereZeta::S2, 1.0, 0.3).residue, WithinAbs(1.0, 1e-12));
}

TEST_CASE("Sphere zeta continued to the left half plane", "[spectra]") {
    // sum (n+1)^2 (n(n+2)+1)^(-s) = zeta_R(2s-2) - 1
    for (double s : {-0.7, 0.2, 0.8}) CHECK_THAT(zeta_sphere3(s, 1.0), WithinAbs(riemann_zeta(2 * s - 2) - 1, 1e-12));
    // sum (2n+1)(n(n+1)+1/4)^(-s) = 2 zeta_H(2s-1, 3/2)
    for (double s : {-0.7, 0.3, 1.7}) CHECK_THAT(zeta_sphere2(s, 0.25), WithinAbs(2 * hurwitz_zeta(2 * s - 1, 1.5), 1e-11));
}

TEST_CASE("zeta(s, U1) against direct sums", "[spectra]") {
    CHECK_THAT(zeta_U1(5.0, 1.0), WithinRel(0.16512914801622436, 1e-13));
    CHECK_THAT(zeta_U1(7.0, 1.5), WithinRel(0.0016726315287906853, 1e-13));
    CHECK_THAT(zeta_U1(5.0, 2.5), WithinRel(0.0016909224756861374, 1e-13));
    for (double nu : {1.0, 1.5, 2.0, 4.0}) {
        const double direct = deterministic_sum(1, 200000, [nu](long n) {
            const double x = static_cast<double>(n);
            return x * (x + 2) * std::pow(nu * (x + 1), -7.0);
        });
        CHECK_THAT(zeta_U1(7.0, nu), WithinRel(direct, 1e-12));
    }
}

TEST_CASE("Residues of zeta(s, U1)", "[spectra]") {
    for (double nu : {1.0, 1.5, 2.0, 4.0}) {
        INFO("nu = " << nu);
        const auto r = residues_U1(nu);
        CHECK_THAT(r[0].residue, WithinAbs(-1.0 / nu, 1e-14));
        CHECK_THAT(r[1].residue, WithinAbs(1.0 / (nu * nu * nu), 1e-14));
        auto z = [nu](double s) { return zeta_U1(s, nu); };
        CHECK_THAT(residue_fit(z, 1.0), WithinAbs(-1.0 / nu, 1e-8));
        CHECK_THAT(residue_fit(z, 3.0), WithinAbs(1.0 / (nu * nu * nu), 1e-8));
    }
    CHECK_THROWS_AS(zeta_U1(3.0, 1.0), pole_error);
    CHECK_THROWS_AS(zeta_U1(2.0, 0.5), domain_error);
}

TEST_CASE("Base sequences reproduce their direct sums", "[spectra]") {
    for (OrderKind k : {OrderKind::mu0, OrderKind::mu1, OrderKind::muS2, OrderKind::muS1}) {
        for (double nu : {1.3, 1.7}) {
            const BaseSequence b(k, nu);
            const double direct =
                deterministic_sum(1, 400000, [&](long n) { return b.mult(n) * std::pow(b.u(n), -6.0); });
            INFO(to_string(k) << " nu = " << nu);
            CHECK_THAT(b.zeta_laurent(6).finite_part(), WithinRel(direct, 1e-11));
            for (int t : b.poles()) CHECK(b.zeta_laurent(t).has_pole(1e-12));
        }
    }
}

TEST_CASE("mu0 base sequence at nu = 1 is a shifted Riemann zeta", "[spectra]") {
    // mu0(n) = n + 1 with multiplicity (n+1)^2, so zeta(t, U) = zeta_R(t-2) - 1.
    const BaseSequence b(OrderKind::mu0, 1.0);
    CHECK_THAT(b.zeta_laurent(1).residue, WithinAbs(0.0, 1e-12));
    CHECK_THAT(b.zeta_laurent(1).finite_part(), WithinAbs(riemann_zeta(-1.0) - 1, 1e-12));
    CHECK_THAT(b.zeta_laurent(3).residue, WithinAbs(1.0, 1e-12));
}

TEST_CASE("Spectrum tables", "[spectra]") {
    CHECK(spectrum_tables(1).size() == 3);
    CHECK(spectrum_tables(2).size() == 4);
    CHECK(spectrum_tables(3).size() == 5);
    CHECK(sphere_spectrum(3).families.size() == 3);
    CHECK_THROWS_AS(spectrum_tables(4), unsupported_error);
    CHECK(multiplicity_value(Multiplicity::two_n_n_plus_2, 3) == 30.0);
    CHECK(multiplicity_value(Multiplicity::n_plus_1_squared, 3) == 16.0);
}

TEST_CASE("Cone geometry validation", "[spectra]") {
    CHECK_THROWS_AS(ConeGeometry(3, 0.0, 1.0), domain_error);
    CHECK_THROWS_AS(ConeGeometry(3, 2.0, 1.0), domain_error);
    CHECK_THROWS_AS(ConeGeometry(3, 1.0, -1.0), domain_error);
    CHECK_THROWS_AS(ConeGeometry(4, 1.0, 1.0), unsupported_error);
    CHECK_NOTHROW(ConeGeometry(2, pi / 2, 1.0));
}

TEST_CASE("Quadratic Bessel zeta at zero against the zero product", "[spectra][slow]") {
    struct Case {
        double nu, q, l;
    };
    for (const Case c : {Case{1, 1, 1}, Case{0.5, 2, 1}, Case{2, 0.5, 3}, Case{0, 0.7, 1.3}, Case{3, 0, 2}}) {
        INFO("nu = " << c.nu << ", q = " << c.q << ", l = " << c.l);
        const ZetaAtZero z = bessel_quadratic_zeta_at0(c.nu, c.q, c.l);
        CHECK_THAT(z.derivative, WithinAbs(product_oracle(c.nu, c.q, c.l, 10000), 1e-6));
        CHECK_THAT(z.value, WithinAbs(-0.5 * (c.nu + 0.5), 1e-15));
    }
    // small q l joins the q = 0 branch continuously
    CHECK_THAT(bessel_quadratic_zeta_at0(1.0, 1e-7, 1.0).derivative,
               WithinAbs(bessel_quadratic_zeta_at0(1.0, 0.0, 1.0).derivative, 1e-10));
}
