#include <catch_amalgamated.hpp>

#include <cmath>

#include "conetorsion/anomaly.hpp"

using namespace conetorsion;
using Catch::Matchers::WithinAbs;
using R = Rational;
using Coeffs = std::map<int, Rational>;

TEST_CASE("Anomaly polynomials for odd spheres", "[anomaly]") {
    CHECK(anomaly_odd_sphere(1, 0.5).exact_coefficients == Coeffs{{1, R(1, 2)}});
    CHECK(anomaly_odd_sphere(2, 0.5).exact_coefficients == Coeffs{{1, R(3, 4)}, {3, R(-1, 12)}});
    CHECK(anomaly_odd_sphere(3, 0.5).exact_coefficients == Coeffs{{1, R(15, 16)}, {3, R(-5, 24)}, {5, R(3, 80)}});
    CHECK_THAT(anomaly_odd_sphere(2, 0.5).value, WithinAbs(0.375 - 0.125 / 12, 1e-15));
    CHECK(anomaly_odd_sphere(1, 0.3).parity == SphereParity::odd);
}

TEST_CASE("Anomaly polynomials for even spheres", "[anomaly]") {
    CHECK(anomaly_even_sphere(1, 0.5).exact_coefficients == Coeffs{{2, R(1, 4)}});
    CHECK(anomaly_even_sphere(2, 0.5).exact_coefficients == Coeffs{{2, R(1, 4)}, {4, R(-1, 16)}});
    CHECK(anomaly_even_sphere(3, 0.5).exact_coefficients == Coeffs{{2, R(1, 8)}, {4, R(-1, 16)}, {6, R(1, 72)}});
    CHECK_THAT(anomaly_even_sphere(1, 0.8).value, WithinAbs(0.16, 1e-15));
}

TEST_CASE("Anomaly input validation", "[anomaly]") {
    CHECK_THROWS_AS(anomaly_odd_sphere(1, 0.0), domain_error);
    CHECK_THROWS_AS(anomaly_even_sphere(1, 1.5), domain_error);
    CHECK_THROWS_AS(anomaly_even_sphere(0, 0.5), domain_error);
    CHECK(euler_characteristic_sphere(2) == 2);
    CHECK(euler_characteristic_sphere(3) == 0);
}

TEST_CASE("Reidemeister torsion is half the log volume", "[anomaly]") {
    const ConeGeometry g(3, pi / 4, 2.0);
    CHECK_THAT(reidemeister(g), WithinAbs(0.5 * std::log(cone_volume(g)), 1e-15));
}

TEST_CASE("Singular term vanishes for odd spheres", "[anomaly]") {
    CHECK(cm_singular_coefficients(1).empty());
    CHECK(cm_singular_coefficients(3).empty());
    CHECK_THROWS_AS(cm_singular_coefficients(2), unsupported_error);
    for (int n : {1, 3})
        for (double alpha : {pi / 7, pi / 3, pi / 2}) {
            const auto d = cm_decomposition(ConeGeometry(n, alpha, 1.3));
            CHECK_THAT(d.singular_term, WithinAbs(0.0, 1e-13));
            CHECK(d.euler_term == 0.0);
        }
}

TEST_CASE("Singular term for the cone over S^2", "[anomaly]") {
    // -f(1/a)/2 - log(2)/2: zero at the disc, nonzero otherwise.
    const auto disc = cm_decomposition(ConeGeometry(2, pi / 2, 1.0));
    CHECK_THAT(disc.singular_term, WithinAbs(0.0, 1e-10));
    CHECK_THAT(disc.euler_term, WithinAbs(0.5 * std::log(2.0), 1e-15));
    const auto cone = cm_decomposition(ConeGeometry(2, pi / 3, 1.0));
    CHECK_THAT(cone.singular_term, WithinAbs(-0.5 * f_function(1 / std::sin(pi / 3)) - 0.5 * std::log(2.0), 1e-12));
    CHECK(std::abs(cone.singular_term) > 1e-3);
}
