#include <catch_amalgamated.hpp>

#include <cmath>

#include "conetorsion/decomp.hpp"

using namespace conetorsion;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using R = Rational;

namespace {

PhiAtZero phi_data(const SequenceCombination& c, int h) {
    return phi_at_zero_exact(phi_mellin(phi_functions(c, h).without_constant()));
}

// Closed forms of zeta'(0) for the two S^3 combinations, nu >= 1.
double part_one_derivative(double nu) {
    return -0.5 * std::log(nu) + riemann_zeta_deriv(-2.0) + 0.5 * std::log(2 * pi) + 1 / (2 * nu) -
           1 / (315 * nu * nu * nu);
}
double part_two_derivative(double nu) {
    return -2 * std::log(nu) - 2 * riemann_zeta_deriv(-2.0) + std::log(pi) + (1 - 1 / (nu * nu)) / (2 * nu) +
           107 / (315 * nu * nu * nu);
}

}  // namespace

TEST_CASE("Phi Laurent data at s = 0 for the J'-J combination", "[decomp]") {
    const auto c = part_one_combination();
    const R expected[] = {R(-1), R(1, 8), R(-2, 315)};
    for (int h = 1; h <= 3; ++h) {
        const PhiAtZero p = phi_data(c, h);
        INFO("h = " << h << ": " << p.finite_part.str());
        CHECK(p.residue.is_zero());
        CHECK(p.finite_part.is_rational());
        CHECK(p.finite_part.rational == expected[h - 1]);
    }
}

TEST_CASE("Phi Laurent data at s = 0 for the 2J-T+-T- combination", "[decomp]") {
    const auto c = part_two_combination();
    CHECK(phi_data(c, 1).finite_part == ExactConstant{2, 0, 0});
    CHECK(phi_data(c, 3).finite_part == ExactConstant{R(214, 315), 0, 0});
    // h = 2 carries a residue, so gamma enters its finite part.
    const PhiAtZero p2 = phi_data(c, 2);
    CHECK(p2.residue == R(-1));
    CHECK(p2.finite_part == ExactConstant{R(-1, 4), 1, 0});
}

TEST_CASE("Phi Laurent data for the G combination", "[decomp]") {
    const PhiAtZero p = phi_data(sphere2_combination(), 2);
    CHECK(p.residue.is_zero());
    CHECK(p.finite_part == ExactConstant{R(1, 2), 0, 0});
}

TEST_CASE("Phi transform against its definition", "[decomp]") {
    const PhiTransform phi = phi_mellin(AsymptoticPolynomial({{1, R(1, 2)}, {3, R(-1, 2)}}));
    const double s = 0.37;
    const double direct = 0.5 * std::tgamma(s + 0.5) / (std::tgamma(0.5) * s) - 0.5 * std::tgamma(s + 1.5) / (std::tgamma(1.5) * s);
    CHECK_THAT(phi.value(s), WithinRel(direct, 1e-13));
    CHECK_THAT(phi_at_zero(phi).finite_part, WithinAbs(-1.0, 1e-14));
    CHECK_THROWS_AS(phi_mellin(AsymptoticPolynomial(R(1))), domain_error);
}

TEST_CASE("Exact digamma", "[decomp]") {
    CHECK(digamma_exact(R(1)) == ExactConstant{0, -1, 0});
    CHECK(digamma_exact(R(3)) == ExactConstant{R(3, 2), -1, 0});
    CHECK(digamma_exact(R(5, 2)) == ExactConstant{R(8, 3), -1, -2});
    CHECK_THAT(digamma_exact(R(7, 2)).to_double(), WithinAbs(1.1031566406452431, 1e-14));
    CHECK_THROWS_AS(digamma_exact(R(1, 3)), unsupported_error);
}

TEST_CASE("zeta(0) of the combinations", "[decomp]") {
    for (double nu : {1.0, 1.3, 2.0, 5.0}) {
        INFO("nu = " << nu);
        CHECK_THAT(zeta_zero_and_deriv(part_one_combination(), nu).value, WithinAbs(0.25, 1e-12));
        CHECK_THAT(zeta_zero_and_deriv(part_two_combination(), nu).value, WithinAbs(1.0, 1e-12));
        CHECK_THAT(zeta_zero_and_deriv(sphere2_combination(), nu).value, WithinAbs(0.0, 1e-12));
    }
}

TEST_CASE("zeta'(0) of the S^3 combinations against closed forms", "[decomp]") {
    for (double nu : {1.0, 1.3, 2.0, 5.0}) {
        INFO("nu = " << nu);
        CHECK_THAT(zeta_zero_and_deriv(part_one_combination(), nu).derivative, WithinAbs(part_one_derivative(nu), 1e-10));
        CHECK_THAT(zeta_zero_and_deriv(part_two_combination(), nu).derivative, WithinAbs(part_two_derivative(nu), 1e-10));
    }
}

TEST_CASE("A-sum does not depend on the truncation", "[decomp]") {
    const auto c = part_two_combination();
    const BaseSequence base(c.order, 1.4);
    ASumOptions a, b;
    a.truncation = 1000;
    b.truncation = 4000;
    const ASumResult ra = a00_continued(c, base, a), rb = a00_continued(c, base, b);
    CHECK_THAT(ra.value, WithinAbs(rb.value, 1e-11));
    CHECK(ra.tail_estimate < 1e-10);
    // Extra subtracted terms move work from the sum to zeta(k, U).
    ASumOptions e = b;
    e.extra_terms = 10;
    CHECK_THAT(a00_continued(c, base, e).value, WithinAbs(rb.value, 1e-11));

    const auto g = sphere2_combination();
    const BaseSequence gb(g.order, 1.25);
    CHECK_THAT(a00_continued(g, gb, a).value, WithinAbs(a00_continued(g, gb, b).value, 1e-11));
}

TEST_CASE("A-sum against a direct sum with two subtracted terms", "[decomp]") {
    // For 2J - T+ - T- the summand is -log(1 - 1/u^2) = u^-2 + u^-4/2 + O(u^-6),
    // and zeta(s, U) of the mu0 base is regular at 2 and 4.
    const auto c = part_two_combination();
    const BaseSequence base(OrderKind::mu0, 2.0);
    const double v = a00_continued(c, base).value;
    CompensatedSum rest;
    for (long n = 1; n <= 200000; ++n) {
        const double u2 = base.u(n) * base.u(n);
        rest += base.mult(n) * (-std::log1p(-1 / u2) - 1 / u2 - 0.5 / (u2 * u2));
    }
    const double z2 = base.zeta_laurent(2).finite_part();
    const double z4 = base.zeta_laurent(4).finite_part();
    CHECK_THAT(v, WithinAbs(rest.value() + z2 + 0.5 * z4, 1e-10));
}

TEST_CASE("Contour integral of the Phi identity", "[decomp][slow]") {
    const std::pair<double, double> pts[] = {{0.3, 0.5}, {0.5, 1.0}, {0.7, 1.0}, {1.2, 2.5}};
    for (const auto& [s, a] : pts) {
        INFO("s = " << s << ", a = " << a);
        CHECK_THAT(contour_integral_check(s, a), WithinRel(contour_integral_exact(s, a), 1e-8));
    }
    CHECK_THROWS_AS(contour_integral_check(0.0, 1.0), domain_error);
    CHECK_THROWS_AS(contour_integral_check(0.5, -1.0), domain_error);
}

TEST_CASE("A-sum input validation", "[decomp]") {
    ASumOptions o;
    o.truncation = 10;
    CHECK_THROWS_AS(a00_continued(part_one_combination(), BaseSequence(OrderKind::mu1, 1.0), o), domain_error);
    CHECK_THROWS_AS(zeta_zero_and_deriv(part_one_combination(), 0.9), domain_error);
}
