#include "qwm/numeric_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qwm {

namespace {

double off_diagonal_norm(const Matrix<cplx>& a) {
    double s = 0.0;
    for (std::size_t p = 0; p < a.rows(); ++p)
        for (std::size_t q = p + 1; q < a.cols(); ++q) s += std::norm(a(p, q));
    return std::sqrt(2.0 * s);
}

// One complex Jacobi rotation zeroing a(p,q). The pivot is first made real
// by a diagonal phase, then the classic real rotation applies.
void rotate(Matrix<cplx>& a, Matrix<cplx>& v, std::size_t p, std::size_t q) {
    const cplx apq = a(p, q);
    const double h = std::abs(apq);
    if (h == 0.0) return;
    const cplx phase = apq / h;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * h);
    double t;
    if (tau >= 0)
        t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
    else
        t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    // G has block [[c, s*phase], [-s*conj(phase), c]] on rows/cols (p, q);
    // A <- G^H A G, V <- V G. With t solving t^2 + 2*tau*t - 1 = 0 this
    // annihilates a(p,q).
    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        const cplx akp = a(k, p);
        const cplx akq = a(k, q);
        a(k, p) = c * akp - s * std::conj(phase) * akq;
        a(k, q) = s * phase * akp + c * akq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const cplx apk = a(p, k);
        const cplx aqk = a(q, k);
        a(p, k) = c * apk - s * phase * aqk;
        a(q, k) = s * std::conj(phase) * apk + c * aqk;
    }
    a(p, q) = cplx(0.0, 0.0);
    a(q, p) = cplx(0.0, 0.0);
    a(p, p) = cplx(a(p, p).real(), 0.0);
    a(q, q) = cplx(a(q, q).real(), 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        const cplx vkp = v(k, p);
        const cplx vkq = v(k, q);
        v(k, p) = c * vkp - s * std::conj(phase) * vkq;
        v(k, q) = s * phase * vkp + c * vkq;
    }
}

} // namespace

HermitianEigen jacobi_hermitian(Matrix<cplx> a, int max_sweeps) {
    if (!a.square()) fail(Errc::BadParameters, "eigensolver needs a square matrix");
    const std::size_t n = a.rows();
    Matrix<cplx> v = Matrix<cplx>::identity(n);
    double scale = 1e-300;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(a(i, j)));

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (off_diagonal_norm(a) <= 1e-14 * scale * static_cast<double>(n)) break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                if (std::abs(a(p, q)) > 1e-300) rotate(a, v, p, q);
    }

    HermitianEigen out;
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.values[i] = a(i, i).real();
    out.vectors = std::move(v);

    // Sort ascending, permuting columns alongside.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return out.values[x] < out.values[y]; });
    std::vector<double> vals(n);
    Matrix<cplx> vecs(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        vals[c] = out.values[order[c]];
        for (std::size_t r = 0; r < n; ++r) vecs(r, c) = out.vectors(r, order[c]);
    }
    out.values = std::move(vals);
    out.vectors = std::move(vecs);
    return out;
}

std::vector<cplx> eigenvalues_normal(const Matrix<cplx>& u) {
    if (!u.square()) fail(Errc::BadParameters, "eigensolver needs a square matrix");
    const std::size_t n = u.rows();
    Matrix<cplx> re(n, n), im(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const cplx uij = u(i, j);
            const cplx uji_c = std::conj(u(j, i));
            re(i, j) = 0.5 * (uij + uji_c);
            im(i, j) = cplx(0.0, -0.5) * (uij - uji_c);
        }

    HermitianEigen base = jacobi_hermitian(re);

    double scale = 1e-300;
    for (double x : base.values) scale = std::max(scale, std::abs(x));
    const double group_tol = 1e-8 * std::max(1.0, scale);

    std::vector<cplx> lambdas(n);
    Matrix<cplx>& v = base.vectors;

    std::size_t start = 0;
    while (start < n) {
        std::size_t stop = start + 1;
        while (stop < n && base.values[stop] - base.values[stop - 1] <= group_tol) ++stop;
        const std::size_t g = stop - start;

        if (g == 1) {
            // Simple eigenvalue of the real part: its vector already
            // diagonalizes the imaginary part too.
        } else {
            // Project the imaginary part onto the eigenspace and finish it
            // off with another Jacobi pass.
            Matrix<cplx> w(n, g), iw(n, g), block(g, g);
            for (std::size_t c = 0; c < g; ++c)
                for (std::size_t r = 0; r < n; ++r) w(r, c) = v(r, start + c);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < g; ++c) {
                    cplx acc(0.0, 0.0);
                    for (std::size_t k = 0; k < n; ++k) acc += im(r, k) * w(k, c);
                    iw(r, c) = acc;
                }
            for (std::size_t rr = 0; rr < g; ++rr)
                for (std::size_t c = 0; c < g; ++c) {
                    cplx acc(0.0, 0.0);
                    for (std::size_t k = 0; k < n; ++k) acc += std::conj(w(k, rr)) * iw(k, c);
                    block(rr, c) = acc;
                }
            HermitianEigen sub = jacobi_hermitian(std::move(block));
            for (std::size_t r = 0; r < n; ++r) {
                for (std::size_t c = 0; c < g; ++c) {
                    cplx acc(0.0, 0.0);
                    for (std::size_t k = 0; k < g; ++k) acc += w(r, k) * sub.vectors(k, c);
                    v(r, start + c) = acc;
                }
            }
        }
        start = stop;
    }

    // Rayleigh quotients against u itself give each eigenvalue; residuals
    // confirm the vectors really are joint eigenvectors.
    double worst = 0.0;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<cplx> uv(n, cplx(0.0, 0.0));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t k = 0; k < n; ++k) uv[r] += u(r, k) * v(k, c);
        cplx lam(0.0, 0.0);
        for (std::size_t r = 0; r < n; ++r) lam += std::conj(v(r, c)) * uv[r];
        double res = 0.0;
        for (std::size_t r = 0; r < n; ++r) res = std::max(res, std::abs(uv[r] - lam * v(r, c)));
        worst = std::max(worst, res);
        lambdas[c] = lam;
    }
    if (worst > 1e-7) fail(Errc::InternalCheckFailed, "normal eigensolver residual too large");

    std::sort(lambdas.begin(), lambdas.end(), [](const cplx& x, const cplx& y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });
    return lambdas;
}

Poly<cplx> poly_from_roots(const std::vector<cplx>& roots) {
    Poly<cplx> p = Poly<cplx>::constant(cplx(1.0, 0.0));
    for (const cplx& r : roots) {
        Poly<cplx> lin;
        lin.c = {-r, cplx(1.0, 0.0)};
        p = p * lin;
    }
    return p;
}

} // namespace qwm
