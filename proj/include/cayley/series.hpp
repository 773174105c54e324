#pragma once

// Exact univariate polynomials and truncated power series over the rationals.
// Series carry a fixed truncation order; binary operations demand operands of
// equal order so that accidental precision loss is a hard error, never silent.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cayley/error.hpp"
#include "cayley/rational.hpp"

namespace cayley {

class Poly {
public:
    Poly() : c_{Rational(0)} {}
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) c_.push_back(Rational(0));
        trim();
    }
    static Poly constant(Rational v) { return Poly({std::move(v)}); }

    /// -1 for the zero polynomial.
    int degree() const {
        for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i)
            if (c_[static_cast<std::size_t>(i)] != 0) return i;
        return -1;
    }

    const Rational& operator[](std::size_t k) const {
        static const Rational zero(0);
        return k < c_.size() ? c_[k] : zero;
    }

    std::size_t size() const { return c_.size(); }

    Rational eval(const Rational& u) const {
        Rational r(0);
        for (std::size_t i = c_.size(); i-- > 0;) r = r * u + c_[i];
        return r;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<Rational> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(i);
        return Poly(std::move(d));
    }

    /// Coefficients of v^cap * P(1/v); requires cap >= degree. Used to clear
    /// the pole when re-reading a parametrization at u = infinity.
    Poly reversed(int cap) const {
        detail::require(degree() <= cap, errc::internal,
                        "poly reversal cap below the degree");
        std::vector<Rational> out(static_cast<std::size_t>(cap) + 1, Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            out[static_cast<std::size_t>(cap) - i] = c_[i];
        return Poly(std::move(out));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
        return Poly(std::move(out));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
        return Poly(std::move(out));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(out));
    }
    friend Poly operator*(const Rational& s, const Poly& a) {
        std::vector<Rational> out(a.c_);
        for (auto& x : out) x *= s;
        return Poly(std::move(out));
    }

private:
    void trim() {
        while (c_.size() > 1 && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

class Series {
public:
    explicit Series(int order)
        : c_(static_cast<std::size_t>(order) + 1, Rational(0)) {
        detail::require(order >= 0, errc::internal, "series order must be >= 0");
    }

    static Series from_poly(const Poly& p, int order) {
        Series s(order);
        for (int k = 0; k <= order; ++k) s[k] = p[static_cast<std::size_t>(k)];
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    const Rational& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
    Rational& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }

    friend Series operator+(const Series& a, const Series& b) {
        Series out = a;
        detail::require(a.order() == b.order(), errc::internal, "series order mismatch");
        for (int k = 0; k <= out.order(); ++k) out[k] += b[k];
        return out;
    }
    friend Series operator-(const Series& a, const Series& b) {
        Series out = a;
        detail::require(a.order() == b.order(), errc::internal, "series order mismatch");
        for (int k = 0; k <= out.order(); ++k) out[k] -= b[k];
        return out;
    }
    friend Series operator*(const Series& a, const Series& b) {
        detail::require(a.order() == b.order(), errc::internal, "series order mismatch");
        Series out(a.order());
        for (int i = 0; i <= a.order(); ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j + i <= a.order(); ++j) out[i + j] += a[i] * b[j];
        }
        return out;
    }
    friend Series operator*(const Rational& s, const Series& a) {
        Series out = a;
        for (int k = 0; k <= out.order(); ++k) out[k] *= s;
        return out;
    }

private:
    std::vector<Rational> c_;
};

/// a / b with b(0) != 0, by the standard coefficient recursion.
inline Series divide(const Series& a, const Series& b) {
    detail::require(a.order() == b.order(), errc::internal, "series order mismatch");
    detail::require(b[0] != 0, errc::internal, "series division needs a unit");
    Series q(a.order());
    for (int n = 0; n <= a.order(); ++n) {
        Rational acc = a[n];
        for (int k = 0; k < n; ++k) acc -= q[k] * b[n - k];
        q[n] = acc / b[0];
    }
    return q;
}

/// f(g(s)) with g(0) = 0, truncated Horner evaluation.
inline Series compose(const Series& f, const Series& g) {
    detail::require(f.order() == g.order(), errc::internal, "series order mismatch");
    detail::require(g[0] == 0, errc::internal, "composition needs g(0) = 0");
    Series out(f.order());
    out[0] = f[f.order()];
    for (int i = f.order() - 1; i >= 0; --i) {
        out = out * g;
        out[0] += f[i];
    }
    return out;
}

/// Compositional inverse of f with f(0) = 0, f'(0) != 0: the unique g with
/// f(g(s)) = s through the truncation order.
inline Series revert(const Series& f) {
    detail::require(f[0] == 0 && f[1] != 0, errc::internal,
                    "series reversion needs f(0) = 0 and f'(0) != 0");
    Series g(f.order());
    g[1] = 1 / f[1];
    for (int m = 2; m <= f.order(); ++m) {
        Series h = compose(f, g);
        g[m] = -h[m] / f[1];
    }
    return g;
}

inline std::string to_string(const Series& s) {
    std::string out = "[";
    for (int k = 0; k <= s.order(); ++k) {
        if (k) out += ", ";
        out += to_string(s[k]);
    }
    return out + "]";
}

}  // namespace cayley
