#include "qwm/charpoly.hpp"

#include <cmath>

#include "qwm/numeric_eigen.hpp"
#include "qwm/walk.hpp"

namespace qwm {

Poly<cplx> charpoly_numeric(const Matrix<cplx>& normal) {
    return poly_from_roots(eigenvalues_normal(normal));
}

std::vector<IndexPair> index_set(int n, int j) {
    if (n < 0 || j < 0 || j > 2 * n) fail(Errc::JOutOfRange, "index set needs 0 <= j <= 2n");
    std::vector<IndexPair> out;
    for (int i = 0; i <= n; ++i) {
        const int num = j - n + i;
        if (num < 0 || num % 2 != 0) continue;
        const int l = num / 2;
        if (l >= 0 && l <= i) out.push_back({i, l});
    }
    return out;
}

Poly<cplx> inherited_factor_numeric(const Poly<cplx>& g, int n) {
    if (g.degree() != n) fail(Errc::BadParameters, "g must have degree n");
    return detail::inherited_substitution(g, n);
}

Poly<Cyclo> normalized_charpoly_exact(const MixedGraph& g, const RationalAngle& eta) {
    if (g.regular_degree())
        return charpoly_exact(normalized_hermitian_exact(g, eta));
    return charpoly_exact(dinv_hermitian_exact(g, eta));
}

bool spectral_map_check_exact(const MixedGraph& g, const RationalAngle& eta) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    ArcOrdering arcs(g);
    Poly<Cyclo> pu = charpoly_exact(time_evolution_exact(g, arcs, eta));
    Poly<Cyclo> psi = inherited_factor(normalized_charpoly_exact(g, eta), n);
    if (m >= n) return pu == psi * x2_minus_1_pow<Cyclo>(static_cast<unsigned long>(m - n));
    return pu * x2_minus_1_pow<Cyclo>(static_cast<unsigned long>(n - m)) == psi;
}

bool spectral_map_check_numeric(const MixedGraph& g, double eta, double tol) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    ArcOrdering arcs(g);
    Poly<cplx> pu = charpoly_numeric(time_evolution_numeric(g, arcs, eta));

    HermitianEigen h = jacobi_hermitian(normalized_hermitian_numeric(g, eta));
    std::vector<cplx> roots(h.values.begin(), h.values.end());
    Poly<cplx> gn = poly_from_roots(roots);
    Poly<cplx> psi = inherited_factor_numeric(gn, n);

    Poly<cplx> lhs = pu, rhs = psi;
    if (m >= n)
        rhs = psi * x2_minus_1_pow<cplx>(static_cast<unsigned long>(m - n));
    else
        lhs = pu * x2_minus_1_pow<cplx>(static_cast<unsigned long>(n - m));
    const std::size_t len = std::max(lhs.c.size(), rhs.c.size());
    for (std::size_t i = 0; i < len; ++i)
        if (std::abs(lhs.coeff(i) - rhs.coeff(i)) > tol) return false;
    return true;
}

namespace {

IdentityCheck check_equal(const std::string& name, const Cyclo& lhs, const Cyclo& rhs) {
    IdentityCheck c;
    c.name = name;
    c.applicable = true;
    c.pass = (lhs == rhs);
    c.lhs = lhs.str();
    c.rhs = rhs.str();
    return c;
}

IdentityCheck not_applicable(const std::string& name) {
    IdentityCheck c;
    c.name = name;
    c.applicable = false;
    c.pass = true;
    return c;
}

} // namespace

std::vector<IdentityCheck> coefficient_identities(const MixedGraph& g, const RationalAngle& eta) {
    const int n = g.vertex_count();
    std::vector<IdentityCheck> out;

    Poly<Cyclo> f = charpoly_exact(hermitian_adjacency_exact(g, eta));
    Poly<Cyclo> gp = normalized_charpoly_exact(g, eta);
    Poly<Cyclo> psi = inherited_factor(gp, n);

    auto fc = [&](int i) { return i >= 0 ? f.coeff(static_cast<std::size_t>(i)) : Cyclo(0); };
    auto dc = [&](int i) { return i >= 0 ? gp.coeff(static_cast<std::size_t>(i)) : Cyclo(0); };
    auto ac = [&](int i) { return i >= 0 ? psi.coeff(static_cast<std::size_t>(i)) : Cyclo(0); };

    out.push_back(check_equal("c_{n-1} = 0", fc(n - 1), Cyclo(0)));
    out.push_back(check_equal("c_{n-2} = -|E|", fc(n - 2), Cyclo(-g.edge_count())));

    if (g.undirected() && n >= 3)
        out.push_back(check_equal("c_{n-3} = -2t", fc(n - 3), Cyclo(-2 * g.triangle_count())));
    else
        out.push_back(not_applicable("c_{n-3} = -2t"));

    const auto k = g.regular_degree();
    if (k) {
        bool pass = true;
        for (int i = 0; i <= n && pass; ++i) {
            Rational scale = 1;
            for (int e = 0; e < n - i; ++e) scale *= Rational(*k);
            pass = (dc(i) * Cyclo(scale) == fc(i));
        }
        IdentityCheck c;
        c.name = "d_i = c_i / k^(n-i)";
        c.applicable = true;
        c.pass = pass;
        c.lhs = "rescaled g";
        c.rhs = "f";
        out.push_back(c);

        out.push_back(check_equal("alpha_{2n-2} = n - 2n/k", ac(2 * n - 2),
                                  Cyclo(Rational(n) - make_rational(2L * n, *k))));
    } else {
        out.push_back(not_applicable("d_i = c_i / k^(n-i)"));
        out.push_back(not_applicable("alpha_{2n-2} = n - 2n/k"));
    }

    out.push_back(check_equal("alpha_{2n} = 1", ac(2 * n), Cyclo(1)));
    out.push_back(check_equal("alpha_{2n-1} = 0", ac(2 * n - 1), Cyclo(0)));
    out.push_back(check_equal("alpha_{2n-2} = n + 4 d_{n-2}", ac(2 * n - 2), Cyclo(n) + Cyclo(4) * dc(n - 2)));
    out.push_back(check_equal("alpha_{2n-3} = 8 d_{n-3}", ac(2 * n - 3), Cyclo(8) * dc(n - 3)));

    return out;
}

bool all_pass(const std::vector<IdentityCheck>& checks) {
    for (const auto& c : checks)
        if (c.applicable && !c.pass) return false;
    return true;
}

} // namespace qwm
