// conetorsion_cli: analytic torsion of cones over spheres from the command line.
//
// Exit codes: 0 success, 1 failed verification or internal error,
// 2 invalid input, 3 non-convergence.

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "conetorsion/conetorsion.hpp"
#include "verify.hpp"

namespace ct = conetorsion;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitValidation = 2;
constexpr int kExitConvergence = 3;

struct Request {
    int dim = 3;
    std::optional<double> alpha;
    std::optional<double> alpha_deg;
    double length = 1.0;
    std::string method = "closed";
    double tolerance = 1e-6;
    std::string format = "json";
    // zeros
    std::string kind = "j";
    double nu = 0.0;
    int count = 10;
    // conjecture
    int p = 2;
    // verify
    std::string suite = "all";
};

double resolve_alpha(const Request& r) {
    if (r.alpha.has_value() == r.alpha_deg.has_value())
        throw ct::domain_error("give exactly one of --alpha and --alpha-deg");
    const double a = r.alpha ? *r.alpha : *r.alpha_deg * ct::pi / 180.0;
    if (!(a > 0.0) || a > ct::pi / 2 + 1e-15) throw ct::domain_error("alpha must lie in (0, pi/2]");
    return a;
}

void check_tolerance(double t) {
    if (!(t > 0.0) || !std::isfinite(t)) throw ct::domain_error("tolerance must be positive");
}

ct::ZeroKind parse_kind(const std::string& s) {
    if (s == "j") return ct::ZeroKind::J;
    if (s == "jprime") return ct::ZeroKind::Jprime;
    if (s == "tplus") return ct::ZeroKind::Tplus;
    if (s == "tminus") return ct::ZeroKind::Tminus;
    if (s == "gplus") return ct::ZeroKind::Gplus;
    if (s == "gminus") return ct::ZeroKind::Gminus;
    throw ct::domain_error("unknown zero kind " + s);
}

json coefficients_json(const std::map<int, ct::Rational>& c) {
    json arr = json::array();
    for (const auto& [k, v] : c) arr.push_back({{"power", k}, {"coefficient", v.str()}, {"value", v.to_double()}});
    return arr;
}

json breakdown_json(const ct::TorsionBreakdown& b) {
    json terms = json::array();
    for (const auto& t : b.extra_terms) terms.push_back({{"name", t.name}, {"value", t.value}});
    return {{"volume_term", b.volume_term}, {"extra_terms", terms}};
}

json input_json(const Request& r, std::optional<double> alpha) {
    json in;
    in["dim"] = r.dim;
    if (alpha) in["alpha"] = *alpha;
    in["length"] = r.length;
    in["method"] = r.method;
    in["tolerance"] = r.tolerance;
    return in;
}

struct Report {
    std::string command;
    json input;
    json result;
    long truncation = 0;
    double tail_estimate = 0.0;
    // CSV rows: section, name, value
    std::vector<std::vector<std::string>> rows;
    std::string text;
};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(15);
    os << v;
    return os.str();
}

Report run_torsion(const Request& r) {
    const double alpha = resolve_alpha(r);
    check_tolerance(r.tolerance);
    if (r.method != "closed" && r.method != "spectral" && r.method != "both")
        throw ct::domain_error("method must be closed, spectral or both");
    const ct::ConeGeometry g(r.dim, alpha, r.length);
    Report rep;
    rep.command = "torsion";
    rep.input = input_json(r, alpha);
    const double spectral_tol = std::max(r.tolerance * 1e-2, 1e-8);
    std::optional<ct::TorsionBreakdown> closed, spectral;
    if (r.method != "spectral") closed = ct::torsion_closed(g);
    if (r.method != "closed") spectral = ct::torsion_spectral(g, spectral_tol);

    const ct::TorsionBreakdown& primary = closed ? *closed : *spectral;
    rep.result["log_torsion"] = primary.log_torsion;
    rep.result["breakdown"] = breakdown_json(primary);
    if (closed) rep.result["breakdown"]["singular_term"] = ct::cm_decomposition(g).singular_term;
    if (r.dim % 2 == 1) rep.result["conjecture"] = ct::conjecture_formula((r.dim + 1) / 2, alpha, r.length);

    std::ostringstream text;
    text.precision(12);
    text << "cone over S^" << r.dim << ", alpha = " << alpha << ", l = " << r.length << "\n";
    auto add_rows = [&](const std::string& section, const ct::TorsionBreakdown& b) {
        rep.rows.push_back({section, "volume_term", fmt(b.volume_term)});
        for (const auto& t : b.extra_terms) rep.rows.push_back({section, t.name, fmt(t.value)});
        rep.rows.push_back({section, "log_torsion", fmt(b.log_torsion)});
        text << section << ": log T = " << b.log_torsion << " (volume term " << b.volume_term;
        for (const auto& t : b.extra_terms) text << ", " << t.name << " " << t.value;
        text << ")\n";
    };
    if (closed) add_rows("closed", *closed);
    if (spectral) {
        add_rows("spectral", *spectral);
        rep.truncation = spectral->diagnostics.truncation;
        rep.tail_estimate = spectral->diagnostics.tail_estimate;
    }
    if (closed && spectral) {
        const double diff = spectral->log_torsion - closed->log_torsion;
        rep.result["spectral"] = {{"log_torsion", spectral->log_torsion}, {"breakdown", breakdown_json(*spectral)}};
        rep.result["difference"] = diff;
        rep.rows.push_back({"both", "difference", fmt(diff)});
        text << "difference: " << diff << "\n";
        if (!(std::abs(diff) < r.tolerance))
            throw ct::convergence_error("closed and spectral values differ by " + fmt(diff) + ", above the tolerance");
    }
    if (closed) rep.rows.push_back({"closed", "singular_term", fmt(rep.result["breakdown"]["singular_term"].get<double>())});
    if (rep.result.contains("conjecture")) {
        rep.rows.push_back({"conjecture", "log_torsion", fmt(rep.result["conjecture"].get<double>())});
        text << "conjecture: " << rep.result["conjecture"].get<double>() << "\n";
    }
    rep.text = text.str();
    return rep;
}

Report run_anomaly(const Request& r) {
    const double alpha = resolve_alpha(r);
    check_tolerance(r.tolerance);
    if (r.dim < 1) throw ct::domain_error("dim must be >= 1");
    if (!(r.length > 0.0)) throw ct::domain_error("length must be positive");
    const double a = std::sin(alpha);
    const ct::AnomalyResult an =
        r.dim % 2 == 0 ? ct::anomaly_even_sphere(r.dim / 2, a) : ct::anomaly_odd_sphere((r.dim + 1) / 2, a);
    Report rep;
    rep.command = "anomaly";
    rep.input = input_json(r, alpha);
    rep.result["anomaly"] = an.value;
    rep.result["parity"] = an.parity == ct::SphereParity::even ? "even" : "odd";
    rep.result["coefficients"] = coefficients_json(an.exact_coefficients);
    rep.rows.push_back({"anomaly", "value", fmt(an.value)});
    for (const auto& [k, v] : an.exact_coefficients) rep.rows.push_back({"anomaly", "a^" + std::to_string(k), v.str()});
    std::ostringstream text;
    text.precision(12);
    text << "anomaly for boundary S^" << r.dim << " at a = " << a << ": " << an.value << "\n";
    if (r.dim <= 3) {
        const ct::CmDecomposition cm = ct::cm_decomposition(ct::ConeGeometry(r.dim, alpha, r.length));
        rep.result["log_torsion"] = cm.actual;
        rep.result["breakdown"] = {{"volume_term", cm.reidemeister},
                                   {"extra_terms", json::array({{{"name", "euler_term"}, {"value", cm.euler_term}},
                                                                {{"name", "anomaly"}, {"value", cm.anomaly}}})},
                                   {"singular_term", cm.singular_term}};
        rep.result["predicted_smooth"] = cm.predicted_smooth;
        for (auto [name, v] : {std::pair<std::string, double>{"reidemeister", cm.reidemeister},
                               {"euler_term", cm.euler_term},
                               {"predicted_smooth", cm.predicted_smooth},
                               {"log_torsion", cm.actual},
                               {"singular_term", cm.singular_term}}) {
            rep.rows.push_back({"decomposition", name, fmt(v)});
            text << name << ": " << v << "\n";
        }
    }
    rep.text = text.str();
    return rep;
}

Report run_conjecture(const Request& r) {
    const double alpha = resolve_alpha(r);
    check_tolerance(r.tolerance);
    if (r.p < 1) throw ct::domain_error("p must be >= 1");
    Report rep;
    rep.command = "conjecture";
    Request shown = r;
    shown.dim = 2 * r.p - 1;
    rep.input = input_json(shown, alpha);
    rep.input["p"] = r.p;
    const double value = ct::conjecture_formula(r.p, alpha, r.length);
    const auto coeffs = ct::odd_sphere_coefficients(r.p);
    rep.result["conjecture"] = value;
    rep.result["coefficients"] = coefficients_json(coeffs);
    rep.rows.push_back({"conjecture", "log_torsion", fmt(value)});
    for (const auto& [k, v] : coeffs) rep.rows.push_back({"conjecture", "a^" + std::to_string(k), v.str()});
    std::ostringstream text;
    text.precision(12);
    text << "conjectured log T for the cone over S^" << shown.dim << ": " << value << "\n";
    if (shown.dim <= 3) {
        const double closed = ct::torsion_closed(ct::ConeGeometry(shown.dim, alpha, r.length)).log_torsion;
        rep.result["log_torsion"] = closed;
        rep.result["difference"] = value - closed;
        rep.rows.push_back({"closed", "log_torsion", fmt(closed)});
        text << "closed form: " << closed << "\n";
    }
    rep.text = text.str();
    return rep;
}

Report run_zeros(const Request& r) {
    const ct::ZeroKind kind = parse_kind(r.kind);
    const auto z = ct::find_zeros(kind, r.nu, r.count);
    Report rep;
    rep.command = "zeros";
    rep.input = {{"kind", r.kind}, {"nu", r.nu}, {"count", r.count}};
    rep.result["kind"] = ct::to_string(kind);
    rep.result["zeros"] = z;
    std::ostringstream text;
    text.precision(11);
    for (std::size_t i = 0; i < z.size(); ++i) {
        rep.rows.push_back({"zeros", std::to_string(i + 1), fmt(z[i])});
        text << i + 1 << " " << z[i] << "\n";
    }
    rep.text = text.str();
    return rep;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += (c == '"') ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

void emit(const Report& rep, const std::string& format, double wall_ms) {
    if (format == "json") {
        json j;
        j["schema_version"] = "1";
        j["command"] = rep.command;
        j["input"] = rep.input;
        j["result"] = rep.result;
        j["diagnostics"] = {{"truncation", rep.truncation}, {"tail_estimate", rep.tail_estimate}, {"wall_time_ms", wall_ms}};
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "section,name,value\n";
        for (const auto& row : rep.rows) std::cout << csv_field(row[0]) << "," << csv_field(row[1]) << "," << csv_field(row[2]) << "\n";
    } else {
        std::cout << rep.text;
    }
}

int run_verify(const Request& r) {
    if (r.suite != "all" && r.suite != "specfun" && r.suite != "decomp" && r.suite != "torsion" && r.suite != "anomaly")
        throw ct::domain_error("unknown suite " + r.suite);
    const auto checks = ct::verify::run(r.suite);
    int failed = 0;
    for (const auto& c : checks) failed += c.pass ? 0 : 1;
    if (r.format == "json") {
        json arr = json::array();
        for (const auto& c : checks)
            arr.push_back({{"suite", c.suite}, {"name", c.name}, {"expected", c.expected}, {"got", c.got},
                           {"tolerance", c.tolerance}, {"status", c.pass ? "pass" : "fail"}});
        std::cout << json{{"suite", r.suite}, {"checks", arr}, {"failed", failed}}.dump(2) << "\n";
    } else if (r.format == "csv") {
        std::cout << "suite,name,expected,got,tolerance,status\n";
        for (const auto& c : checks)
            std::cout << csv_field(c.suite) << "," << csv_field(c.name) << "," << csv_field(c.expected) << ","
                      << csv_field(c.got) << "," << csv_field(c.tolerance) << "," << (c.pass ? "pass" : "fail") << "\n";
    } else {
        std::size_t w = 4;
        for (const auto& c : checks) w = std::max(w, c.name.size());
        std::printf("%-8s  %-*s  %-24s  %-24s  %-10s  %s\n", "suite", static_cast<int>(w), "name", "expected", "got",
                    "tolerance", "status");
        for (const auto& c : checks)
            std::printf("%-8s  %-*s  %-24s  %-24s  %-10s  %s\n", c.suite.c_str(), static_cast<int>(w), c.name.c_str(),
                        c.expected.c_str(), c.got.c_str(), c.tolerance.c_str(), c.pass ? "pass" : "FAIL");
        std::printf("%zu checks, %d failed\n", checks.size(), failed);
    }
    return failed == 0 ? 0 : kExitFailure;
}

void add_geometry(CLI::App* cmd, Request& r) {
    cmd->add_option("--alpha", r.alpha, "cone angle in radians, 0 < alpha <= pi/2");
    cmd->add_option("--alpha-deg", r.alpha_deg, "cone angle in degrees, 0 < alpha <= 90");
    cmd->add_option("--length", r.length, "cone length l > 0")->capture_default_str();
    cmd->add_option("--tolerance", r.tolerance, "accuracy target")->capture_default_str();
}

void add_format(CLI::App* cmd, Request& r) {
    cmd->add_option("--format", r.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Analytic torsion of cones over spheres"};
    app.require_subcommand(1);
    Request r;

    auto* torsion = app.add_subcommand("torsion", "log torsion of the cone over S^dim");
    torsion->add_option("--dim", r.dim, "sphere dimension (1, 2 or 3)")->capture_default_str();
    add_geometry(torsion, r);
    torsion->add_option("--method", r.method, "closed, spectral or both")
        ->check(CLI::IsMember({"closed", "spectral", "both"}))
        ->capture_default_str();
    add_format(torsion, r);

    auto* anomaly = app.add_subcommand("anomaly", "boundary anomaly and torsion decomposition");
    anomaly->add_option("--dim", r.dim, "dimension of the boundary sphere")->capture_default_str();
    add_geometry(anomaly, r);
    add_format(anomaly, r);

    auto* conjecture = app.add_subcommand("conjecture", "conjectured torsion of the cone over S^(2p-1)");
    conjecture->add_option("--p", r.p, "p >= 1")->capture_default_str();
    add_geometry(conjecture, r);
    add_format(conjecture, r);

    auto* zeros = app.add_subcommand("zeros", "positive zeros of Bessel-type functions");
    zeros->add_option("--kind", r.kind, "j, jprime, tplus, tminus, gplus or gminus")
        ->check(CLI::IsMember({"j", "jprime", "tplus", "tminus", "gplus", "gminus"}))
        ->capture_default_str();
    zeros->add_option("--nu", r.nu, "order nu >= 0")->capture_default_str();
    zeros->add_option("--count", r.count, "number of zeros")->capture_default_str();
    add_format(zeros, r);

    auto* verify = app.add_subcommand("verify", "run the verification suites");
    verify->add_option("--suite", r.suite, "all, specfun, decomp, torsion or anomaly")
        ->check(CLI::IsMember({"all", "specfun", "decomp", "torsion", "anomaly"}))
        ->capture_default_str();
    verify->add_option("--format", r.format, "output format (default text)")->check(CLI::IsMember({"json", "csv", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        if (verify->parsed()) {
            if (verify->count("--format") == 0) r.format = "text";
            return run_verify(r);
        }
        const auto t0 = std::chrono::steady_clock::now();
        Report rep;
        if (torsion->parsed()) rep = run_torsion(r);
        if (anomaly->parsed()) rep = run_anomaly(r);
        if (conjecture->parsed()) rep = run_conjecture(r);
        if (zeros->parsed()) rep = run_zeros(r);
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        emit(rep, r.format, ms);
        return 0;
    } catch (const ct::convergence_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConvergence;
    } catch (const ct::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const ct::unsupported_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const ct::pole_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}
