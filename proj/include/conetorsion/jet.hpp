#pragma once

// Truncated Taylor series in a small parameter eps, and simple-pole Laurent
// series built on top. Used to carry values, derivatives, residues and
// finite parts of zeta functions through the same code path.

#include <array>
#include <cmath>
#include <cstddef>

namespace conetorsion {

template <std::size_t K>
struct Jet {
    std::array<double, K> c{};  // c[i] is the coefficient of eps^i

    Jet() = default;
    Jet(double v) { c[0] = v; }  // NOLINT: implicit lift of constants

    static Jet variable(double v) {
        Jet j(v);
        if constexpr (K > 1) j.c[1] = 1.0;
        return j;
    }

    double value() const { return c[0]; }
    double operator[](std::size_t i) const { return c[i]; }
    double& operator[](std::size_t i) { return c[i]; }

    Jet& operator+=(const Jet& o) {
        for (std::size_t i = 0; i < K; ++i) c[i] += o.c[i];
        return *this;
    }
    Jet& operator-=(const Jet& o) {
        for (std::size_t i = 0; i < K; ++i) c[i] -= o.c[i];
        return *this;
    }
    Jet& operator*=(double s) {
        for (auto& x : c) x *= s;
        return *this;
    }
    Jet& operator*=(const Jet& o) { return *this = *this * o; }
    Jet& operator/=(const Jet& o) { return *this = *this / o; }

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator-(Jet a) {
        for (auto& x : a.c) x = -x;
        return a;
    }
    friend Jet operator*(Jet a, double s) { return a *= s; }
    friend Jet operator*(double s, Jet a) { return a *= s; }
    friend Jet operator*(const Jet& a, const Jet& b) {
        Jet r;
        for (std::size_t i = 0; i < K; ++i)
            for (std::size_t j = 0; i + j < K; ++j) r.c[i + j] += a.c[i] * b.c[j];
        return r;
    }
    friend Jet operator/(const Jet& a, const Jet& b) {
        Jet r;
        for (std::size_t i = 0; i < K; ++i) {
            double s = a.c[i];
            for (std::size_t j = 1; j <= i; ++j) s -= b.c[j] * r.c[i - j];
            r.c[i] = s / b.c[0];
        }
        return r;
    }
    friend Jet operator/(Jet a, double s) { return a *= (1.0 / s); }
};

namespace detail {
// Sum over n of d^n * w[n] for the nilpotent part d of a jet.
template <std::size_t K, class F>
Jet<K> nilpotent_series(const Jet<K>& d, F weight) {
    Jet<K> r(weight(0));
    Jet<K> pw(1.0);
    for (std::size_t n = 1; n < K; ++n) {
        pw = pw * d;
        r += pw * weight(n);
    }
    return r;
}
}  // namespace detail

template <std::size_t K>
Jet<K> exp(const Jet<K>& a) {
    Jet<K> d = a;
    d.c[0] = 0.0;
    double f = 1.0;
    auto r = detail::nilpotent_series(d, [&](std::size_t n) {
        if (n > 0) f /= static_cast<double>(n);
        return f;
    });
    return r * std::exp(a.c[0]);
}

template <std::size_t K>
Jet<K> log(const Jet<K>& a) {
    Jet<K> d = a / a.c[0];
    d.c[0] = 0.0;
    auto r = detail::nilpotent_series(d, [](std::size_t n) {
        if (n == 0) return 0.0;
        return ((n % 2) ? 1.0 : -1.0) / static_cast<double>(n);
    });
    r.c[0] = std::log(a.c[0]);
    return r;
}

// (e^x - 1)/x, valid for jets whose constant term is zero.
template <std::size_t K>
Jet<K> exprel_nilpotent(const Jet<K>& x) {
    double f = 1.0;
    return detail::nilpotent_series(x, [&](std::size_t n) {
        f /= static_cast<double>(n + 1);
        return f;
    });
}

// base^e with the constant term from std::pow, which is more accurate than
// exp(e log base) when the result is large.
template <std::size_t K>
Jet<K> pow(double base, const Jet<K>& e) {
    Jet<K> d = e * std::log(base);
    d.c[0] = 0.0;
    return exp(d) * std::pow(base, e.c[0]);
}

template <std::size_t K>
Jet<K> pow(const Jet<K>& b, double e) {
    return exp(log(b) * e);
}

template <std::size_t K>
Jet<K> sqrt(const Jet<K>& b) {
    return pow(b, 0.5);
}

constexpr std::size_t kJetOrder = 4;
using Jet4 = Jet<kJetOrder>;

// residue/eps + regular(eps). Only simple poles are represented.
struct Laurent {
    double residue = 0.0;
    Jet4 regular;

    Laurent() = default;
    Laurent(double res, const Jet4& reg) : residue(res), regular(reg) {}
    explicit Laurent(const Jet4& reg) : regular(reg) {}

    double finite_part() const { return regular.c[0]; }
    // Derivative of the regular part at eps = 0.
    double derivative() const { return regular.c[1]; }
    bool has_pole(double tol = 0.0) const { return std::abs(residue) > tol; }

    Laurent& operator+=(const Laurent& o) {
        residue += o.residue;
        regular += o.regular;
        return *this;
    }
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(const Laurent& a, const Laurent& b) {
        return {a.residue - b.residue, a.regular - b.regular};
    }
    friend Laurent operator*(const Laurent& a, double s) {
        return {a.residue * s, a.regular * s};
    }
    // The top coefficient of the product is incomplete when a pole is present;
    // only the first K-1 regular coefficients are reliable.
    friend Laurent operator*(const Laurent& a, const Jet4& j) {
        Laurent r{a.residue * j.c[0], a.regular * j};
        for (std::size_t i = 1; i < kJetOrder; ++i) r.regular.c[i - 1] += a.residue * j.c[i];
        return r;
    }
    friend Laurent operator*(const Jet4& j, const Laurent& a) { return a * j; }

    // Re-express in eps' where eps = scale * eps'.
    Laurent rescaled(double scale) const {
        Laurent r{residue / scale, regular};
        double f = 1.0;
        for (std::size_t i = 0; i < kJetOrder; ++i) {
            r.regular.c[i] *= f;
            f *= scale;
        }
        return r;
    }
};

}  // namespace conetorsion
