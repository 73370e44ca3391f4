#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "qwm/cyclotomic.hpp"
#include "qwm/errors.hpp"

namespace qwm {

using cplx = std::complex<double>;

/// Dense row-major matrix. Scalar is exact (Rational, Cyclo) or cplx;
/// construction zero-fills. Immutable by convention once built.
template <class S>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), d_(rows * cols, S(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool square() const { return r_ == c_; }

    S& operator()(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.d_ == b.d_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<S> d_;
};

/// Fused accumulate acc += a*b; Cyclo has a cheaper dedicated path.
template <class S>
inline void fma_acc(S& acc, const S& a, const S& b) {
    acc += a * b;
}
inline void fma_acc(Cyclo& acc, const Cyclo& a, const Cyclo& b) { acc.add_mul(a, b); }

namespace kernels {

/// Reference implementation: plain triple loop, no threading. Kept for
/// correctness tests and as the baseline in the kernel benchmark.
template <class S>
Matrix<S> matmul_serial(const Matrix<S>& a, const Matrix<S>& b) {
    if (a.cols() != b.rows()) fail(Errc::BadParameters, "matmul shape mismatch");
    Matrix<S> r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const S& aik = a(i, k);
            if (aik == S(0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) fma_acc(r(i, j), aik, b(k, j));
        }
    return r;
}

/// Production kernel: rows are independent, so they are farmed out with
/// OpenMP once the problem is big enough to pay for the fork.
template <class S>
Matrix<S> matmul(const Matrix<S>& a, const Matrix<S>& b) {
    if (a.cols() != b.rows()) fail(Errc::BadParameters, "matmul shape mismatch");
    Matrix<S> r(a.rows(), b.cols());
    const std::size_t work = a.rows() * a.cols() * b.cols();
    if (work < 32768) return matmul_serial(a, b);
#pragma omp parallel for schedule(static)
    for (long long ii = 0; ii < static_cast<long long>(a.rows()); ++ii) {
        const std::size_t i = static_cast<std::size_t>(ii);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const S& aik = a(i, k);
            if (aik == S(0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) fma_acc(r(i, j), aik, b(k, j));
        }
    }
    return r;
}

template <class S>
Matrix<S> matpow(const Matrix<S>& a, unsigned long long e) {
    if (!a.square()) fail(Errc::BadParameters, "matpow needs a square matrix");
    Matrix<S> result = Matrix<S>::identity(a.rows());
    Matrix<S> base = a;
    while (e > 0) {
        if (e & 1ULL) result = matmul(result, base);
        e >>= 1ULL;
        if (e > 0) base = matmul(base, base);
    }
    return result;
}

template <class S>
Matrix<S> conj_transpose(const Matrix<S>& a) {
    Matrix<S> r(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = conj_scalar(a(i, j));
    return r;
}

template <class S>
S trace(const Matrix<S>& a) {
    S t(0);
    for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

template <class S>
bool equals_identity(const Matrix<S>& a) {
    if (!a.square()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!(a(i, j) == (i == j ? S(1) : S(0)))) return false;
    return true;
}

template <class S>
bool is_hermitian(const Matrix<S>& a) {
    if (!a.square()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i; j < a.cols(); ++j)
            if (!(a(i, j) == conj_scalar(a(j, i)))) return false;
    return true;
}

inline double max_abs_diff(const Matrix<cplx>& a, const Matrix<cplx>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) fail(Errc::BadParameters, "shape mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

inline double max_abs_diff_identity(const Matrix<cplx>& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m = std::max(m, std::abs(a(i, j) - (i == j ? cplx(1.0) : cplx(0.0))));
    return m;
}

} // namespace kernels

/// Entrywise map of an exact matrix into doubles.
Matrix<cplx> to_complex_matrix(const Matrix<Cyclo>& a);

} // namespace qwm
