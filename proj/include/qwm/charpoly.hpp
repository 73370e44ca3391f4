#pragma once

#include <string>
#include <vector>

#include "qwm/cyclotomic.hpp"
#include "qwm/graph.hpp"
#include "qwm/matrix.hpp"
#include "qwm/poly.hpp"

namespace qwm {

/// Faddeev–LeVerrier characteristic polynomial. Exact over any field of
/// characteristic zero (the only divisions are by integers). O(n^4) scalar
/// multiplies — the serial reference the fast path is tested against.
template <class S>
Poly<S> charpoly_faddeev(const Matrix<S>& a) {
    if (!a.square()) fail(Errc::BadParameters, "charpoly needs a square matrix");
    const std::size_t n = a.rows();
    std::vector<S> coeff(n + 1, S(0));
    coeff[n] = S(1);
    Matrix<S> m = a;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            Matrix<S> shifted = m;
            for (std::size_t i = 0; i < n; ++i) shifted(i, i) += coeff[n - k + 1];
            m = kernels::matmul_serial(a, shifted);
        }
        S t = kernels::trace(m);
        coeff[n - k] = -(t * S(make_rational(1, static_cast<long>(k))));
    }
    return Poly<S>(std::move(coeff));
}

/// Characteristic polynomial via similarity reduction to Hessenberg form
/// followed by the standard leading-minor recurrence. O(n^3) field
/// operations, exact; the production path for every exact charpoly here.
template <class S>
Poly<S> charpoly_hessenberg(Matrix<S> m) {
    if (!m.square()) fail(Errc::BadParameters, "charpoly needs a square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Poly<S>::constant(S(1));

    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t pivot = 0;
        bool found = false;
        for (std::size_t r = j + 1; r < n; ++r) {
            if (!(m(r, j) == S(0))) {
                pivot = r;
                found = true;
                break;
            }
        }
        if (!found) continue;
        if (pivot != j + 1) {
            for (std::size_t k = 0; k < n; ++k) std::swap(m(pivot, k), m(j + 1, k));
            for (std::size_t k = 0; k < n; ++k) std::swap(m(k, pivot), m(k, j + 1));
        }
        const S inv_pivot = scalar_inverse(m(j + 1, j));
        for (std::size_t i = j + 2; i < n; ++i) {
            if (m(i, j) == S(0)) continue;
            const S f = m(i, j) * inv_pivot;
            for (std::size_t k = j; k < n; ++k) m(i, k) -= f * m(j + 1, k);
            for (std::size_t k = 0; k < n; ++k) m(k, j + 1) += f * m(k, i);
        }
    }

    // p_k(x) = (x - m[k-1][k-1]) p_{k-1}(x)
    //          - sum_i m[k-1-i][k-1] * (prod of subdiagonals) * p_{k-1-i}(x)
    std::vector<Poly<S>> p(n + 1);
    p[0] = Poly<S>::constant(S(1));
    for (std::size_t k = 1; k <= n; ++k) {
        Poly<S> x_minus;
        x_minus.c = {-m(k - 1, k - 1), S(1)};
        p[k] = x_minus * p[k - 1];
        S prod(1);
        for (std::size_t i = 1; i < k; ++i) {
            prod = prod * m(k - i, k - i - 1);
            if (prod == S(0)) break;
            p[k] -= (p[k - 1 - i] * Poly<S>::constant(m(k - 1 - i, k - 1) * prod));
        }
    }
    return p[n];
}

template <class S>
Poly<S> charpoly_exact(const Matrix<S>& a) {
    return charpoly_hessenberg(a);
}

Poly<cplx> charpoly_numeric(const Matrix<cplx>& normal);

struct IndexPair {
    int i = 0;
    int l = 0;
    friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

/// All (i, l) with 0 <= l <= i <= n and n + 2l - i = j.
std::vector<IndexPair> index_set(int n, int j);

namespace detail {

template <class S>
S from_rational(const Rational& q) {
    return S(q);
}
template <>
inline cplx from_rational<cplx>(const Rational& q) {
    return cplx(rat_to_double(q), 0.0);
}

/// Substitution route: (2x)^n g((x + 1/x)/2) = sum_i d_i 2^(n-i) x^(n-i) (x^2+1)^i.
template <class S>
Poly<S> inherited_substitution(const Poly<S>& g, int n) {
    Poly<S> acc;
    Poly<S> x2p1;
    x2p1.c = {S(1), S(0), S(1)};
    Poly<S> power = Poly<S>::constant(S(1));
    for (int i = 0; i <= n; ++i) {
        const S di = g.coeff(static_cast<std::size_t>(i));
        if (!(di == S(0))) {
            S scale = di * from_rational<S>(pow2_rational(n - i));
            acc += power.scaled(scale).shifted(static_cast<std::size_t>(n - i));
        }
        if (i < n) power = power * x2p1;
    }
    return acc;
}

/// Index-set route: alpha_j = sum over (i,l) in I_j of 2^(n-i) d_i C(i,l).
template <class S>
Poly<S> inherited_index_sets(const Poly<S>& g, int n) {
    std::vector<S> alpha(static_cast<std::size_t>(2 * n + 1), S(0));
    for (int j = 0; j <= 2 * n; ++j) {
        for (const IndexPair& p : index_set(n, j)) {
            Rational w = pow2_rational(n - p.i) * Rational(binomial(static_cast<unsigned long>(p.i),
                                                                    static_cast<unsigned long>(p.l)));
            alpha[static_cast<std::size_t>(j)] +=
                g.coeff(static_cast<std::size_t>(p.i)) * from_rational<S>(w);
        }
    }
    return Poly<S>(std::move(alpha));
}

} // namespace detail

/// Inherited factor Psi of the walk spectrum, computed independently by
/// Laurent substitution and by the index-set coefficient sums. The two must
/// agree exactly; disagreement signals an internal bug and throws
/// ImplementationMismatch.
template <class S>
Poly<S> inherited_factor(const Poly<S>& g, int n) {
    if (g.degree() != n) fail(Errc::BadParameters, "g must have degree n");
    Poly<S> a = detail::inherited_substitution(g, n);
    Poly<S> b = detail::inherited_index_sets(g, n);
    if (!(a == b)) fail(Errc::ImplementationMismatch, "inherited factor routes disagree");
    return a;
}

/// Numeric variant, substitution route only (the dual check is an exact-mode
/// affair).
Poly<cplx> inherited_factor_numeric(const Poly<cplx>& g, int n);

/// Exact g(x) = det(xI - Htilde): (1/k)H for regular graphs, D^-1 H
/// otherwise (similar matrices, identical characteristic polynomial).
Poly<Cyclo> normalized_charpoly_exact(const MixedGraph& g, const RationalAngle& eta);

/// charpoly(U) == (x^2-1)^(m-n) * Psi, with the factor moved to the left
/// side when m < n (trees).
bool spectral_map_check_exact(const MixedGraph& g, const RationalAngle& eta);
bool spectral_map_check_numeric(const MixedGraph& g, double eta, double tol = 1e-8);

struct IdentityCheck {
    std::string name;
    bool applicable = false;
    bool pass = false;
    std::string lhs;
    std::string rhs;
};

/// Every coefficient identity tied to the graph's combinatorics, evaluated
/// exactly: c_{n-1} = 0, c_{n-2} = -|E|, c_{n-3} = -2t (undirected),
/// d_i = c_i / k^(n-i) and alpha_{2n-2} = n - 2n/k (regular), plus the
/// leading alpha values alpha_{2n} = 1, alpha_{2n-1} = 0,
/// alpha_{2n-2} = n + 4 d_{n-2}, alpha_{2n-3} = 8 d_{n-3}.
std::vector<IdentityCheck> coefficient_identities(const MixedGraph& g, const RationalAngle& eta);

bool all_pass(const std::vector<IdentityCheck>& checks);

} // namespace qwm
