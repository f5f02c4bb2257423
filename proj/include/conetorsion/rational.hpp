#pragma once

// Exact rational arithmetic on 64-bit numerators and denominators, and
// polynomials in p = (1 - lambda)^(-1/2) with rational coefficients.

#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "conetorsion/error.hpp"

namespace conetorsion {

class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT: integers lift implicitly
    Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    bool is_zero() const { return num_ == 0; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
        __int128 d = static_cast<__int128>(a.den_) * b.den_;
        return from_wide(n, d);
    }
    friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw domain_error("rational division by zero");
        return from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }

    std::string str() const {
        std::ostringstream os;
        os << num_;
        if (den_ != 1) os << '/' << den_;
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    static __int128 gcd128(__int128 a, __int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }
    static Rational from_wide(__int128 n, __int128 d) {
        if (d == 0) throw domain_error("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        constexpr __int128 lim = static_cast<__int128>(INT64_MAX);
        if (n > lim || n < -lim || d > lim) throw overflow_error("rational overflow");
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }
    void assign(std::int64_t n, std::int64_t d) { *this = from_wide(n, d); }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

// Sum of c_m * p^m. With p = (1 - lambda)^(-1/2), the power m is the term
// (1 - lambda)^(-m/2); power 0 is the constant term.
class AsymptoticPolynomial {
public:
    using Map = std::map<int, Rational>;

    AsymptoticPolynomial() = default;
    AsymptoticPolynomial(Rational constant) { set(0, constant); }  // NOLINT
    AsymptoticPolynomial(std::initializer_list<std::pair<const int, Rational>> init) {
        for (const auto& [m, c] : init) set(m, c);
    }

    static AsymptoticPolynomial monomial(int power, Rational c = 1) {
        AsymptoticPolynomial r;
        r.set(power, c);
        return r;
    }

    const Map& coefficients() const { return c_; }
    Rational coeff(int power) const {
        auto it = c_.find(power);
        return it == c_.end() ? Rational(0) : it->second;
    }
    Rational constant() const { return coeff(0); }
    int degree() const { return c_.empty() ? 0 : c_.rbegin()->first; }
    bool is_zero() const { return c_.empty(); }

    void set(int power, Rational c) {
        if (power < 0) throw domain_error("negative power in asymptotic polynomial");
        if (c.is_zero())
            c_.erase(power);
        else
            c_[power] = c;
    }

    // (coefficient, exponent a) pairs for the non-constant terms.
    std::vector<std::pair<Rational, Rational>> terms() const {
        std::vector<std::pair<Rational, Rational>> out;
        for (const auto& [m, c] : c_)
            if (m > 0) out.emplace_back(c, Rational(m, 2));
        return out;
    }

    AsymptoticPolynomial without_constant() const {
        AsymptoticPolynomial r = *this;
        r.c_.erase(0);
        return r;
    }

    double eval_p(double p) const {
        double s = 0.0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) s += it->second.to_double() * std::pow(p, it->first);
        return s;
    }
    // Evaluation at lambda on the negative real axis (or any lambda < 1).
    double eval_lambda(double lambda) const { return eval_p(1.0 / std::sqrt(1.0 - lambda)); }

    AsymptoticPolynomial derivative() const {
        AsymptoticPolynomial r;
        for (const auto& [m, c] : c_)
            if (m > 0) r.set(m - 1, c * Rational(m));
        return r;
    }
    // Antiderivative vanishing at p = 0.
    AsymptoticPolynomial integral() const {
        AsymptoticPolynomial r;
        for (const auto& [m, c] : c_) r.set(m + 1, c / Rational(m + 1));
        return r;
    }

    AsymptoticPolynomial& operator+=(const AsymptoticPolynomial& o) {
        for (const auto& [m, c] : o.c_) set(m, coeff(m) + c);
        return *this;
    }
    AsymptoticPolynomial& operator-=(const AsymptoticPolynomial& o) {
        for (const auto& [m, c] : o.c_) set(m, coeff(m) - c);
        return *this;
    }
    friend AsymptoticPolynomial operator+(AsymptoticPolynomial a, const AsymptoticPolynomial& b) { return a += b; }
    friend AsymptoticPolynomial operator-(AsymptoticPolynomial a, const AsymptoticPolynomial& b) { return a -= b; }
    friend AsymptoticPolynomial operator-(const AsymptoticPolynomial& a) { return AsymptoticPolynomial() - a; }
    friend AsymptoticPolynomial operator*(const AsymptoticPolynomial& a, const AsymptoticPolynomial& b) {
        AsymptoticPolynomial r;
        for (const auto& [m, c] : a.c_)
            for (const auto& [k, d] : b.c_) r.set(m + k, r.coeff(m + k) + c * d);
        return r;
    }
    friend AsymptoticPolynomial operator*(const AsymptoticPolynomial& a, const Rational& s) {
        AsymptoticPolynomial r;
        for (const auto& [m, c] : a.c_) r.set(m, c * s);
        return r;
    }
    friend AsymptoticPolynomial operator*(const Rational& s, const AsymptoticPolynomial& a) { return a * s; }

    friend bool operator==(const AsymptoticPolynomial& a, const AsymptoticPolynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const AsymptoticPolynomial& a, const AsymptoticPolynomial& b) { return !(a == b); }

    std::string str() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : c_) {
            if (!first) os << " + ";
            first = false;
            os << '(' << c.str() << ')';
            if (m > 0) os << "*p^" << m;
        }
        return os.str();
    }

private:
    Map c_;
};

inline std::ostream& operator<<(std::ostream& os, const AsymptoticPolynomial& p) { return os << p.str(); }

// r + g * gamma + l * log 2, the closed form of finite parts of Gamma ratios
// at integer and half-integer arguments.
struct ExactConstant {
    Rational rational;
    Rational gamma;
    Rational log2;

    static constexpr double euler_gamma = 0.57721566490153286060651209;

    double to_double() const {
        return rational.to_double() + gamma.to_double() * euler_gamma + log2.to_double() * std::log(2.0);
    }
    bool is_rational() const { return gamma.is_zero() && log2.is_zero(); }

    ExactConstant& operator+=(const ExactConstant& o) {
        rational += o.rational;
        gamma += o.gamma;
        log2 += o.log2;
        return *this;
    }
    friend ExactConstant operator*(const ExactConstant& a, const Rational& s) {
        return {a.rational * s, a.gamma * s, a.log2 * s};
    }
    friend bool operator==(const ExactConstant& a, const ExactConstant& b) {
        return a.rational == b.rational && a.gamma == b.gamma && a.log2 == b.log2;
    }

    std::string str() const {
        std::ostringstream os;
        os << rational.str();
        if (!gamma.is_zero()) os << " + (" << gamma.str() << ")*gamma";
        if (!log2.is_zero()) os << " + (" << log2.str() << ")*log2";
        return os.str();
    }
};

// psi(a) for a positive integer or half-integer, exactly.
inline ExactConstant digamma_exact(const Rational& a) {
    if (a.den() == 1 && a.num() >= 1) {
        ExactConstant r{0, -1, 0};
        for (std::int64_t k = 1; k < a.num(); ++k) r.rational += Rational(1, k);
        return r;
    }
    if (a.den() == 2 && a.num() >= 1) {
        // psi(n + 1/2) = -gamma - 2 log 2 + sum_{k=1}^{n} 2/(2k-1)
        std::int64_t n = (a.num() - 1) / 2;
        ExactConstant r{0, -1, -2};
        for (std::int64_t k = 1; k <= n; ++k) r.rational += Rational(2, 2 * k - 1);
        return r;
    }
    throw unsupported_error("exact digamma needs a positive integer or half-integer, got " + a.str());
}

}  // namespace conetorsion
