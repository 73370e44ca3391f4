#pragma once

#include <iosfwd>

#include "qwm/cyclotomic.hpp"
#include "qwm/graph.hpp"
#include "qwm/matrix.hpp"

namespace qwm {

// Vertex-indexed matrices. The exact variants carry entries in Q(zeta_b)
// where b is the angle's denominator; undirected graphs land in plain Q.

Matrix<Cyclo> hermitian_adjacency_exact(const MixedGraph& g, const RationalAngle& eta);
Matrix<cplx> hermitian_adjacency_numeric(const MixedGraph& g, double eta);

Matrix<Cyclo> degree_matrix_exact(const MixedGraph& g);
Matrix<cplx> degree_matrix_numeric(const MixedGraph& g);

/// (1/k) H_eta; exact normalization exists only for regular graphs, where
/// the square roots cancel. Irregular graphs must use dinv_hermitian_exact
/// (same characteristic polynomial) or the numeric variant.
Matrix<Cyclo> normalized_hermitian_exact(const MixedGraph& g, const RationalAngle& eta);

/// D^-1 H_eta: similar to D^-1/2 H D^-1/2, hence shares its characteristic
/// polynomial while staying inside the cyclotomic field.
Matrix<Cyclo> dinv_hermitian_exact(const MixedGraph& g, const RationalAngle& eta);

Matrix<cplx> normalized_hermitian_numeric(const MixedGraph& g, double eta);

// Arc-indexed matrices, rows/columns following the given ArcOrdering.

/// Boundary matrix K (vertices x arcs) with entries 1/sqrt(deg); numeric
/// only, since the entries are irrational.
Matrix<cplx> boundary_numeric(const MixedGraph& g, const ArcOrdering& arcs);

/// Coin C = 2 K*K - I. The exact builder uses the closed form of K*K
/// (2/deg on matching-terminus pairs minus identity), which is rational;
/// the numeric builder goes through K so the two routes are independent.
Matrix<Cyclo> coin_exact(const MixedGraph& g, const ArcOrdering& arcs);
Matrix<cplx> coin_numeric(const MixedGraph& g, const ArcOrdering& arcs);

Matrix<Cyclo> shift_exact(const MixedGraph& g, const ArcOrdering& arcs, const RationalAngle& eta);
Matrix<cplx> shift_numeric(const MixedGraph& g, const ArcOrdering& arcs, double eta);

/// Time evolution U = S C.
Matrix<Cyclo> time_evolution_exact(const MixedGraph& g, const ArcOrdering& arcs, const RationalAngle& eta);
Matrix<cplx> time_evolution_numeric(const MixedGraph& g, const ArcOrdering& arcs, double eta);

/// Check every entry of U against the closed form
/// e^(-theta(a) i) * (2/deg t(b) * [o(a)=t(b)] - [a=b^-1]).
bool verify_entry_formula_exact(const MixedGraph& g, const ArcOrdering& arcs, const RationalAngle& eta,
                                const Matrix<Cyclo>& u);
bool verify_entry_formula_numeric(const MixedGraph& g, const ArcOrdering& arcs, double eta,
                                  const Matrix<cplx>& u, double tol = 1e-10);

void dump_matrix_csv(std::ostream& os, const Matrix<Cyclo>& m);
void dump_matrix_csv(std::ostream& os, const Matrix<cplx>& m);

} // namespace qwm
