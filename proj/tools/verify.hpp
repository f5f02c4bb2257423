#pragma once

// Verification suites run by `conetorsion_cli verify`.

#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "conetorsion/conetorsion.hpp"

namespace conetorsion::verify {

struct Check {
    std::string suite;
    std::string name;
    std::string expected;
    std::string got;
    std::string tolerance;
    bool pass = false;
};

namespace detail {

inline std::string num(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

inline std::string poly_str(const std::map<int, Rational>& c) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : c) {
        if (!first) os << " + ";
        os << "(" << v.str() << ")a^" << k;
        first = false;
    }
    return first ? "0" : os.str();
}

class Recorder {
public:
    Recorder(std::string suite, std::vector<Check>& out) : suite_(std::move(suite)), out_(out) {}

    void numeric(const std::string& name, double expected, double got, double tol) {
        out_.push_back({suite_, name, num(expected), num(got), num(tol), std::abs(got - expected) <= tol});
    }
    void exact(const std::string& name, const std::string& expected, const std::string& got) {
        out_.push_back({suite_, name, expected, got, "exact", expected == got});
    }
    // Runs f and records a failing row if it throws.
    void guarded(const std::string& name, const std::function<void()>& f) {
        try {
            f();
        } catch (const std::exception& e) {
            out_.push_back({suite_, name, "no exception", e.what(), "-", false});
        }
    }

private:
    std::string suite_;
    std::vector<Check>& out_;
};

}  // namespace detail

inline void specfun_suite(std::vector<Check>& out) {
    detail::Recorder r("specfun", out);
    r.guarded("specfun", [&] {
        r.numeric("j_{0,1}", 2.4048255576957728, find_zeros(ZeroKind::J, 0.0, 1)[0], 1e-13);
        r.numeric("j_{5,1}", 8.771483815959954, find_zeros(ZeroKind::J, 5.0, 1)[0], 1e-13);
        r.numeric("j'_{1,1}", 1.8411837813406593, find_zeros(ZeroKind::Jprime, 1.0, 1)[0], 1e-13);
        r.numeric("zeta'(-2)", -0.030448457058393271, riemann_zeta_deriv(-2.0), 1e-13);
        r.numeric("zeta_H(-2.5, 1.7)", -0.40596110194108211, hurwitz_zeta(-2.5, 1.7), 1e-12);
        r.numeric("zeta_H(3, 1/4)", 64.66386996876846, hurwitz_zeta(3.0, 0.25), 1e-10);
        r.numeric("log I_30(45)", 32.415832316793519, log_bessel_i(30.0, 45.0), 1e-10);
        r.numeric("log I_100(1)", -433.05161839406589, log_bessel_i(100.0, 1.0), 1e-9);
        double residual = 0.0;
        for (double nu : {0.0, 0.5, 1.0, 5.0, 20.0})
            for (double z : find_zeros(ZeroKind::J, nu, 50)) residual = std::max(residual, std::abs(bessel_j(nu, z)));
        r.numeric("max |J_nu(j_{nu,k})|, 50 zeros", 0.0, residual, 1e-12);
    });
}

inline void decomp_suite(std::vector<Check>& out) {
    detail::Recorder r("decomp", out);
    r.guarded("decomp", [&] {
        for (double nu : {1.0, 2.0}) {
            r.numeric("zeta(0) J'-J, nu=" + detail::num(nu), 0.25, zeta_zero_and_deriv(part_one_combination(), nu).value, 1e-12);
            r.numeric("zeta(0) 2J-T+-T-, nu=" + detail::num(nu), 1.0, zeta_zero_and_deriv(part_two_combination(), nu).value, 1e-12);
        }
        const std::pair<SequenceCombination, std::vector<std::string>> targets[] = {
            {part_one_combination(), {"-1", "1/8", "-2/315"}},
            {part_two_combination(), {"2", "-5/2", "214/315"}},
        };
        for (const auto& [comb, expected] : targets)
            for (int h = 1; h <= 3; ++h) {
                const PhiAtZero p = phi_at_zero_exact(phi_mellin(phi_functions(comb, h).without_constant()));
                r.exact("Phi_" + std::to_string(h) + " finite part, " + comb.name, expected[h - 1], p.finite_part.str());
            }
        for (auto [s, a] : {std::pair{0.3, 0.5}, std::pair{0.5, 1.0}, std::pair{0.7, 1.0}, std::pair{1.2, 2.5}}) {
            const double exact = contour_integral_exact(s, a);
            r.numeric("contour s=" + detail::num(s) + " a=" + detail::num(a), exact, contour_integral_check(s, a),
                      1e-6 * std::abs(exact));
        }
        for (double nu : {1.0, 1.5, 2.0, 4.0}) {
            const auto res = residues_U1(nu);
            r.numeric("Res_1 zeta(s,U1), nu=" + detail::num(nu), -1 / nu, res[0].residue, 1e-8);
            r.numeric("Res_3 zeta(s,U1), nu=" + detail::num(nu), 1 / (nu * nu * nu), res[1].residue, 1e-8);
        }
        r.numeric("Res_1 zeta(t,L_q), q=1/2", 0.25, zeta_L_laurent(1.0, 0.5).residue, 1e-8);
    });
}

inline void torsion_suite(std::vector<Check>& out) {
    detail::Recorder r("torsion", out);
    r.guarded("torsion", [&] {
        r.numeric("closed n=1 alpha=pi/2 l=1", 1.0723649, torsion_closed(ConeGeometry(1, pi / 2, 1)).log_torsion, 1e-6);
        r.numeric("closed n=3 alpha=pi/2 l=1", 1.4648233, torsion_closed(ConeGeometry(3, pi / 2, 1)).log_torsion, 1e-6);
        r.numeric("f(1) via continuation", -std::log(2.0), f_continuation(1.0), 1e-5);
        for (int n = 1; n <= 3; ++n)
            for (double alpha : {pi / 6, pi / 4, pi / 3, pi / 2})
                for (double l : {0.5, 1.0, 2.0}) {
                    const ConeGeometry g(n, alpha, l);
                    std::ostringstream name;
                    name.precision(4);
                    name << "spectral - closed, n=" << n << " alpha=" << alpha << " l=" << l;
                    r.numeric(name.str(), torsion_closed(g).log_torsion, torsion_spectral(g).log_torsion,
                              n == 2 ? 1e-4 : 1e-5);
                }
        r.numeric("conjecture p=2 - closed n=3", torsion_closed(ConeGeometry(3, pi / 3, 1.5)).log_torsion,
                  conjecture_formula(2, pi / 3, 1.5), 1e-12);
    });
}

inline void anomaly_suite(std::vector<Check>& out) {
    detail::Recorder r("anomaly", out);
    r.guarded("anomaly", [&] {
        r.exact("odd sphere p=1", "(1/2)a^1", detail::poly_str(odd_sphere_coefficients(1)));
        r.exact("odd sphere p=2", "(3/4)a^1 + (-1/12)a^3", detail::poly_str(odd_sphere_coefficients(2)));
        r.exact("odd sphere p=3", "(15/16)a^1 + (-5/24)a^3 + (3/80)a^5", detail::poly_str(odd_sphere_coefficients(3)));
        r.exact("even sphere p=1", "(1/4)a^2", detail::poly_str(even_sphere_coefficients(1)));
        r.exact("even sphere p=2", "(1/4)a^2 + (-1/16)a^4", detail::poly_str(even_sphere_coefficients(2)));
        r.exact("singular term n=1", "0", detail::poly_str(cm_singular_coefficients(1)));
        r.exact("singular term n=3", "0", detail::poly_str(cm_singular_coefficients(3)));
        r.numeric("singular term n=2 alpha=pi/2", 0.0, cm_decomposition(ConeGeometry(2, pi / 2, 1)).singular_term, 1e-5);
    });
}

inline std::vector<Check> run(const std::string& suite) {
    std::vector<Check> out;
    if (suite == "all" || suite == "specfun") specfun_suite(out);
    if (suite == "all" || suite == "decomp") decomp_suite(out);
    if (suite == "all" || suite == "torsion") torsion_suite(out);
    if (suite == "all" || suite == "anomaly") anomaly_suite(out);
    return out;
}

}  // namespace conetorsion::verify
