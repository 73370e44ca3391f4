#pragma once

#include <vector>

#include "qwm/matrix.hpp"
#include "qwm/poly.hpp"

namespace qwm {

struct HermitianEigen {
    std::vector<double> values;  // ascending
    Matrix<cplx> vectors;        // columns, orthonormal
};

/// Cyclic complex Jacobi for Hermitian matrices (dimensions here stay
/// below ~400).
HermitianEigen jacobi_hermitian(Matrix<cplx> a, int max_sweeps = 64);

/// Eigenvalues of a normal matrix (all walk matrices are unitary or
/// Hermitian). Splits u into commuting Hermitian parts (u + u*)/2 and
/// (u - u*)/(2i), diagonalizes the first, then diagonalizes the second
/// within each eigenspace. Residuals are verified internally.
std::vector<cplx> eigenvalues_normal(const Matrix<cplx>& u);

/// Monic polynomial with the given roots.
Poly<cplx> poly_from_roots(const std::vector<cplx>& roots);

} // namespace qwm
