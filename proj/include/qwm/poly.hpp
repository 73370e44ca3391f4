#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qwm/errors.hpp"
#include "qwm/rational.hpp"

namespace qwm {

/// Dense univariate polynomial, constant term first. The zero polynomial
/// stores no coefficients (degree() == -1). Exact scalar types compare with
/// operator== so trailing zeros can be trimmed reliably.
template <class S>
struct Poly {
    std::vector<S> c;

    Poly() = default;
    explicit Poly(std::vector<S> coeffs) : c(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly{}; }

    static Poly constant(S v) {
        Poly p;
        p.c.push_back(std::move(v));
        p.trim();
        return p;
    }

    /// v * x^k
    static Poly monomial(S v, std::size_t k) {
        Poly p;
        p.c.assign(k + 1, S(0));
        p.c[k] = std::move(v);
        p.trim();
        return p;
    }

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }

    S coeff(std::size_t i) const { return i < c.size() ? c[i] : S(0); }

    const S& leading() const {
        if (c.empty()) fail(Errc::BadParameters, "leading coefficient of zero polynomial");
        return c.back();
    }

    bool is_monic() const { return !c.empty() && c.back() == S(1); }

    void trim() {
        while (!c.empty() && c.back() == S(0)) c.pop_back();
    }

    Poly& operator+=(const Poly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size(), S(0));
        for (std::size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
        trim();
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size(), S(0));
        for (std::size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly{};
        Poly r;
        r.c.assign(a.c.size() + b.c.size() - 1, S(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == S(0)) continue;
            for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        }
        r.trim();
        return r;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& v : r.c) v = -v;
        return r;
    }

    Poly scaled(const S& k) const {
        Poly r = *this;
        for (auto& v : r.c) v = v * k;
        r.trim();
        return r;
    }

    /// this * x^k
    Poly shifted(std::size_t k) const {
        if (is_zero()) return Poly{};
        Poly r;
        r.c.assign(c.size() + k, S(0));
        for (std::size_t i = 0; i < c.size(); ++i) r.c[i + k] = c[i];
        return r;
    }

    S eval(const S& x) const {
        S y(0);
        for (std::size_t i = c.size(); i-- > 0;) y = y * x + c[i];
        return y;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c.size() != b.c.size()) return false;
        for (std::size_t i = 0; i < a.c.size(); ++i)
            if (!(a.c[i] == b.c[i])) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
};

template <class S>
Poly<S> poly_pow(const Poly<S>& base, unsigned long e) {
    Poly<S> r = Poly<S>::constant(S(1));
    Poly<S> b = base;
    while (e > 0) {
        if (e & 1UL) r = r * b;
        e >>= 1UL;
        if (e > 0) b = b * b;
    }
    return r;
}

/// Euclidean division over a field: num = q * den + r with deg r < deg den.
/// scalar_inverse(S) must be available for the scalar type.
template <class S>
std::pair<Poly<S>, Poly<S>> poly_divmod(const Poly<S>& num, const Poly<S>& den) {
    if (den.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
    Poly<S> q, r = num;
    const int dd = den.degree();
    if (r.degree() < dd) return {q, r};
    q.c.assign(static_cast<std::size_t>(r.degree() - dd) + 1, S(0));
    const S lead_inv = scalar_inverse(den.leading());
    for (int i = r.degree(); i >= dd; --i) {
        if (r.c[static_cast<std::size_t>(i)] == S(0)) continue;
        S f = r.c[static_cast<std::size_t>(i)] * lead_inv;
        q.c[static_cast<std::size_t>(i - dd)] = f;
        for (int j = 0; j <= dd; ++j)
            r.c[static_cast<std::size_t>(i - dd + j)] -= f * den.c[static_cast<std::size_t>(j)];
    }
    q.trim();
    r.trim();
    return {q, r};
}

/// x^2 - 1 raised to the k-th power (the birth factor of a walk spectrum).
template <class S>
Poly<S> x2_minus_1_pow(unsigned long k) {
    Poly<S> base;
    base.c = {S(-1), S(0), S(1)};
    return poly_pow(base, k);
}

} // namespace qwm
