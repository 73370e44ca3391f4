#include "qwm/walk.hpp"

#include <cmath>
#include <ostream>

namespace qwm {

Matrix<cplx> to_complex_matrix(const Matrix<Cyclo>& a) {
    Matrix<cplx> r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j).to_complex();
    return r;
}

Matrix<Cyclo> hermitian_adjacency_exact(const MixedGraph& g, const RationalAngle& eta) {
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    Matrix<Cyclo> h(n, n);
    const Cyclo unit = unit_from_angle(eta);
    const Cyclo unit_conj = unit.conj();
    for (const Edge& e : g.edges()) {
        const std::size_t u = static_cast<std::size_t>(e.u), v = static_cast<std::size_t>(e.v);
        switch (e.orient) {
            case Orient::Both:
                h(u, v) = Cyclo(1);
                h(v, u) = Cyclo(1);
                break;
            case Orient::LowToHigh:
                h(u, v) = unit;
                h(v, u) = unit_conj;
                break;
            case Orient::HighToLow:
                h(u, v) = unit_conj;
                h(v, u) = unit;
                break;
        }
    }
    return h;
}

Matrix<cplx> hermitian_adjacency_numeric(const MixedGraph& g, double eta) {
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    Matrix<cplx> h(n, n);
    const cplx unit = std::polar(1.0, eta);
    for (const Edge& e : g.edges()) {
        const std::size_t u = static_cast<std::size_t>(e.u), v = static_cast<std::size_t>(e.v);
        switch (e.orient) {
            case Orient::Both:
                h(u, v) = cplx(1.0, 0.0);
                h(v, u) = cplx(1.0, 0.0);
                break;
            case Orient::LowToHigh:
                h(u, v) = unit;
                h(v, u) = std::conj(unit);
                break;
            case Orient::HighToLow:
                h(u, v) = std::conj(unit);
                h(v, u) = unit;
                break;
        }
    }
    return h;
}

Matrix<Cyclo> degree_matrix_exact(const MixedGraph& g) {
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    Matrix<Cyclo> d(n, n);
    for (std::size_t x = 0; x < n; ++x) d(x, x) = Cyclo(g.degree(static_cast<int>(x)));
    return d;
}

Matrix<cplx> degree_matrix_numeric(const MixedGraph& g) {
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    Matrix<cplx> d(n, n);
    for (std::size_t x = 0; x < n; ++x) d(x, x) = cplx(g.degree(static_cast<int>(x)), 0.0);
    return d;
}

Matrix<Cyclo> normalized_hermitian_exact(const MixedGraph& g, const RationalAngle& eta) {
    auto k = g.regular_degree();
    if (!k)
        fail(Errc::NonRegularExactNormalization,
             "exact normalized adjacency needs a regular graph; use dinv_hermitian_exact");
    Matrix<Cyclo> h = hermitian_adjacency_exact(g, eta);
    const Cyclo inv_k(make_rational(1, *k));
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < h.cols(); ++j)
            if (!h(i, j).is_zero()) h(i, j) = h(i, j) * inv_k;
    return h;
}

Matrix<Cyclo> dinv_hermitian_exact(const MixedGraph& g, const RationalAngle& eta) {
    Matrix<Cyclo> h = hermitian_adjacency_exact(g, eta);
    for (std::size_t i = 0; i < h.rows(); ++i) {
        const Cyclo inv_deg(make_rational(1, g.degree(static_cast<int>(i))));
        for (std::size_t j = 0; j < h.cols(); ++j)
            if (!h(i, j).is_zero()) h(i, j) = h(i, j) * inv_deg;
    }
    return h;
}

Matrix<cplx> normalized_hermitian_numeric(const MixedGraph& g, double eta) {
    Matrix<cplx> h = hermitian_adjacency_numeric(g, eta);
    const std::size_t n = h.rows();
    std::vector<double> inv_sqrt(n);
    for (std::size_t x = 0; x < n; ++x) inv_sqrt[x] = 1.0 / std::sqrt(static_cast<double>(g.degree(static_cast<int>(x))));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h(i, j) *= inv_sqrt[i] * inv_sqrt[j];
    return h;
}

Matrix<cplx> boundary_numeric(const MixedGraph& g, const ArcOrdering& arcs) {
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    Matrix<cplx> k(n, arcs.size());
    for (std::size_t a = 0; a < arcs.size(); ++a) {
        const int t = arcs.arc(a).terminus;
        k(static_cast<std::size_t>(t), a) = cplx(1.0 / std::sqrt(static_cast<double>(g.degree(t))), 0.0);
    }
    return k;
}

Matrix<Cyclo> coin_exact(const MixedGraph& g, const ArcOrdering& arcs) {
    const std::size_t two_m = arcs.size();
    Matrix<Cyclo> c(two_m, two_m);
    for (std::size_t a = 0; a < two_m; ++a) {
        const int ta = arcs.arc(a).terminus;
        const Rational two_over_deg = make_rational(2, g.degree(ta));
        for (std::size_t b = 0; b < two_m; ++b) {
            if (arcs.arc(b).terminus != ta) continue;
            c(a, b) = Cyclo(two_over_deg);
        }
        c(a, a) -= Cyclo(1);
    }
    return c;
}

Matrix<cplx> coin_numeric(const MixedGraph& g, const ArcOrdering& arcs) {
    Matrix<cplx> k = boundary_numeric(g, arcs);
    Matrix<cplx> c = kernels::matmul(kernels::conj_transpose(k), k);
    for (std::size_t i = 0; i < c.rows(); ++i) {
        for (std::size_t j = 0; j < c.cols(); ++j) c(i, j) *= 2.0;
        c(i, i) -= 1.0;
    }
    return c;
}

Matrix<Cyclo> shift_exact(const MixedGraph& g, const ArcOrdering& arcs, const RationalAngle& eta) {
    (void)g;
    const std::size_t two_m = arcs.size();
    Matrix<Cyclo> s(two_m, two_m);
    const Cyclo unit = unit_from_angle(eta);
    const Cyclo unit_conj = unit.conj();
    for (std::size_t b = 0; b < two_m; ++b) {
        const std::size_t a = arcs.reverse_index(b);
        const int sign = arcs.arc(b).sign;
        s(a, b) = sign == 0 ? Cyclo(1) : (sign > 0 ? unit : unit_conj);
    }
    return s;
}

Matrix<cplx> shift_numeric(const MixedGraph& g, const ArcOrdering& arcs, double eta) {
    (void)g;
    const std::size_t two_m = arcs.size();
    Matrix<cplx> s(two_m, two_m);
    for (std::size_t b = 0; b < two_m; ++b) {
        const std::size_t a = arcs.reverse_index(b);
        s(a, b) = std::polar(1.0, eta * arcs.arc(b).sign);
    }
    return s;
}

Matrix<Cyclo> time_evolution_exact(const MixedGraph& g, const ArcOrdering& arcs, const RationalAngle& eta) {
    return kernels::matmul(shift_exact(g, arcs, eta), coin_exact(g, arcs));
}

Matrix<cplx> time_evolution_numeric(const MixedGraph& g, const ArcOrdering& arcs, double eta) {
    return kernels::matmul(shift_numeric(g, arcs, eta), coin_numeric(g, arcs));
}

bool verify_entry_formula_exact(const MixedGraph& g, const ArcOrdering& arcs, const RationalAngle& eta,
                                const Matrix<Cyclo>& u) {
    const std::size_t two_m = arcs.size();
    if (u.rows() != two_m || u.cols() != two_m) return false;
    const Cyclo unit = unit_from_angle(eta);
    const Cyclo unit_conj = unit.conj();
    for (std::size_t a = 0; a < two_m; ++a) {
        // e^(-theta(a) i)
        const int sa = arcs.arc(a).sign;
        const Cyclo front = sa == 0 ? Cyclo(1) : (sa > 0 ? unit_conj : unit);
        for (std::size_t b = 0; b < two_m; ++b) {
            Cyclo expected(0);
            if (arcs.arc(a).origin == arcs.arc(b).terminus)
                expected += Cyclo(make_rational(2, g.degree(arcs.arc(b).terminus)));
            if (a == arcs.reverse_index(b)) expected -= Cyclo(1);
            expected = front * expected;
            if (!(u(a, b) == expected)) return false;
        }
    }
    return true;
}

bool verify_entry_formula_numeric(const MixedGraph& g, const ArcOrdering& arcs, double eta,
                                  const Matrix<cplx>& u, double tol) {
    const std::size_t two_m = arcs.size();
    if (u.rows() != two_m || u.cols() != two_m) return false;
    for (std::size_t a = 0; a < two_m; ++a) {
        const cplx front = std::polar(1.0, -eta * arcs.arc(a).sign);
        for (std::size_t b = 0; b < two_m; ++b) {
            cplx expected(0.0, 0.0);
            if (arcs.arc(a).origin == arcs.arc(b).terminus)
                expected += 2.0 / static_cast<double>(g.degree(arcs.arc(b).terminus));
            if (a == arcs.reverse_index(b)) expected -= 1.0;
            expected *= front;
            if (std::abs(u(a, b) - expected) > tol) return false;
        }
    }
    return true;
}

void dump_matrix_csv(std::ostream& os, const Matrix<Cyclo>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) os << ",";
            os << m(i, j).str();
        }
        os << "\n";
    }
}

void dump_matrix_csv(std::ostream& os, const Matrix<cplx>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) os << ",";
            os << '"' << scalar_str(m(i, j)) << '"';
        }
        os << "\n";
    }
}

} // namespace qwm
