#include "doctest.h"
#include "oracles.hpp"
#include "qwm/charpoly.hpp"
#include "qwm/numeric_eigen.hpp"
#include "qwm/rng.hpp"
#include "qwm/walk.hpp"

using namespace qwm;

namespace {

Poly<Rational> to_rational_poly(const Poly<Cyclo>& p) {
    std::vector<Rational> c;
    for (const auto& x : p.c) c.push_back(x.rational_value());
    return Poly<Rational>(std::move(c));
}

Matrix<Rational> adjacency_matrix(const MixedGraph& g) {
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    const std::vector<int> a = g.adjacency();
    Matrix<Rational> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(a[i * n + j]);
    return m;
}

} // namespace

TEST_CASE("charpoly: identity and known spectra") {
    // (x-1)^3
    Poly<Rational> id3 = charpoly_exact(Matrix<Rational>::identity(3));
    CHECK(id3 == oracles::poly_from_integer_roots({1, 1, 1}));

    // K_4 adjacency: spectrum {3, -1, -1, -1} -> x^4 - 6x^2 - 8x - 3
    Poly<Rational> k4 = charpoly_exact(adjacency_matrix(complete_graph(4)));
    CHECK(k4 == oracles::poly_from_integer_roots({3, -1, -1, -1}));
    CHECK(k4.coeff(2) == Rational(-6));
    CHECK(k4.coeff(1) == Rational(-8));
    CHECK(k4.coeff(0) == Rational(-3));

    // C_3 adjacency: {2, -1, -1} -> x^3 - 3x - 2
    CHECK(charpoly_exact(adjacency_matrix(cycle_graph(3))) == oracles::poly_from_integer_roots({2, -1, -1}));
}

TEST_CASE("Hessenberg and Faddeev-LeVerrier agree") {
    SplitMix64 rng(0xc0de);
    for (int rep = 0; rep < 10; ++rep) {
        std::size_t n = 2 + rng.below(6);
        Matrix<Cyclo> a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = oracles::random_cyclo(rng, 6);
        CHECK(charpoly_hessenberg(a) == charpoly_faddeev(a));
    }
    // and on a real walk matrix
    MixedGraph g = cycle_graph(3, {1, 0, 2});
    ArcOrdering arcs(g);
    Matrix<Cyclo> u = time_evolution_exact(g, arcs, make_angle(1, 6));
    CHECK(charpoly_hessenberg(u) == charpoly_faddeev(u));
}

TEST_CASE("index sets") {
    // I_{2n} = {(n, n)}
    for (int n : {1, 4, 9}) {
        auto top = index_set(n, 2 * n);
        REQUIRE(top.size() == 1);
        CHECK(top[0] == IndexPair{n, n});
    }
    // I_{2n-3} = {(n-1, n-2), (n-3, n-3)}
    for (int n : {3, 5, 8}) {
        auto s = index_set(n, 2 * n - 3);
        REQUIRE(s.size() == 2);
        CHECK(s[0] == IndexPair{n - 3, n - 3});
        CHECK(s[1] == IndexPair{n - 1, n - 2});
    }
    // brute force for n = 3, j = 3
    auto s = index_set(3, 3);
    REQUIRE(s.size() == 2);
    CHECK(s[0] == IndexPair{0, 0});
    CHECK(s[1] == IndexPair{2, 1});

    CHECK_THROWS_AS((void)index_set(3, 7), Error);
}

TEST_CASE("index sets partition I") {
    for (int n = 1; n <= 12; ++n) {
        std::vector<std::vector<int>> seen(static_cast<std::size_t>(n + 1));
        for (auto& row : seen) row.assign(static_cast<std::size_t>(n + 1), 0);
        std::size_t total = 0;
        for (int j = 0; j <= 2 * n; ++j) {
            for (const IndexPair& p : index_set(n, j)) {
                CHECK(p.i >= 0);
                CHECK(p.i <= n);
                CHECK(p.l >= 0);
                CHECK(p.l <= p.i);
                CHECK(n + 2 * p.l - p.i == j);
                seen[static_cast<std::size_t>(p.i)][static_cast<std::size_t>(p.l)]++;
                ++total;
            }
        }
        // each admissible (i, l) exactly once
        CHECK(total == static_cast<std::size_t>((n + 1) * (n + 2) / 2));
        for (int i = 0; i <= n; ++i)
            for (int l = 0; l <= i; ++l) CHECK(seen[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] == 1);
    }
}

TEST_CASE("inherited factor of C_3") {
    // g = x^3 - (3/4)x - 1/4 (normalized spectrum {1, -1/2, -1/2})
    Poly<Rational> g;
    g.c = {make_rational(-1, 4), make_rational(-3, 4), Rational(0), Rational(1)};
    Poly<Rational> psi = inherited_factor(g, 3);
    // oracle value: prod over mu of ((x^2+1) - 2x mu) = (x^3 - 1)^2
    Poly<Rational> expected;
    expected.c = {Rational(1), Rational(0), Rational(0), Rational(-2), Rational(0), Rational(0), Rational(1)};
    CHECK(psi == expected);
}

TEST_CASE("inherited factor of x^n collapses to (x^2+1)^n") {
    Poly<Rational> g = Poly<Rational>::monomial(Rational(1), 5);
    Poly<Rational> psi = inherited_factor(g, 5);
    Poly<Rational> base;
    base.c = {Rational(1), Rational(0), Rational(1)};
    CHECK(psi == poly_pow(base, 5));
}

TEST_CASE("inherited factor leading coefficients") {
    SplitMix64 rng(0xdada);
    for (int rep = 0; rep < 12; ++rep) {
        // random monic g with d_{n-1} = 0, as walk polynomials always have
        int n = 2 + static_cast<int>(rng.below(5));
        std::vector<Rational> c(static_cast<std::size_t>(n + 1));
        for (int i = 0; i <= n - 2; ++i)
            c[static_cast<std::size_t>(i)] = make_rational(static_cast<long>(rng.below(9)) - 4, 1 + static_cast<long>(rng.below(3)));
        c[static_cast<std::size_t>(n - 1)] = Rational(0);
        c[static_cast<std::size_t>(n)] = Rational(1);
        Poly<Rational> g(std::move(c));
        Poly<Rational> psi = inherited_factor(g, n);
        CHECK(psi.degree() == 2 * n);
        CHECK(psi.coeff(static_cast<std::size_t>(2 * n)) == Rational(1));
        CHECK(psi.coeff(static_cast<std::size_t>(2 * n - 1)) == Rational(0));
        CHECK(psi.coeff(static_cast<std::size_t>(2 * n - 2)) ==
              Rational(n) + Rational(4) * g.coeff(static_cast<std::size_t>(n - 2)));
        if (n >= 3)
            CHECK(psi.coeff(static_cast<std::size_t>(2 * n - 3)) ==
                  Rational(8) * g.coeff(static_cast<std::size_t>(n - 3)));
    }
}

TEST_CASE("spectral mapping: worked instances") {
    CHECK(spectral_map_check_exact(cycle_graph(3), make_angle(0, 1)));
    CHECK(spectral_map_check_exact(complete_graph(4), make_angle(1, 4)));
    // tree: m - n = -1, the factor moves to the other side
    CHECK(spectral_map_check_exact(path_graph(2), make_angle(0, 1)));
    CHECK(spectral_map_check_exact(path_graph(4), make_angle(1, 6)));
    // numeric agreement
    CHECK(spectral_map_check_numeric(cycle_graph(3), 0.0));
    CHECK(spectral_map_check_numeric(complete_graph(4), 1.3));
}

TEST_CASE("charpoly(U) of C_3 equals (x^3-1)^2") {
    MixedGraph c3 = cycle_graph(3);
    ArcOrdering arcs(c3);
    Poly<Cyclo> pu = charpoly_exact(time_evolution_exact(c3, arcs, make_angle(0, 1)));
    Poly<Rational> expected;
    expected.c = {Rational(1), Rational(0), Rational(0), Rational(-2), Rational(0), Rational(0), Rational(1)};
    CHECK(to_rational_poly(pu) == expected);
}

TEST_CASE("spectral mapping and identities on a random corpus") {
    SplitMix64 rng(0x5eed);
    const std::vector<RationalAngle> angles = {make_angle(0, 1), make_angle(1, 4), make_angle(1, 6),
                                               make_angle(1, 5)};
    for (int rep = 0; rep < 12; ++rep) {
        MixedGraph g = random_connected_mixed_graph(rng, 2, 6);
        const RationalAngle a = angles[static_cast<std::size_t>(rep) % angles.size()];
        CHECK(spectral_map_check_exact(g, a));
        CHECK(spectral_map_check_numeric(g, angle_radians(a)));
        CHECK(all_pass(coefficient_identities(g, a)));
    }
}

TEST_CASE("coefficient identities: named examples") {
    auto k4 = coefficient_identities(complete_graph(4), make_angle(1, 4));
    CHECK(all_pass(k4));
    auto c3 = coefficient_identities(cycle_graph(3), make_angle(0, 1));
    CHECK(all_pass(c3));
    // alpha_{2n-2} of C_3 is n - 2n/k = 0; recompute from Psi directly
    Poly<Cyclo> psi = inherited_factor(normalized_charpoly_exact(cycle_graph(3), make_angle(0, 1)), 3);
    CHECK(psi.coeff(4) == Cyclo(0));
}

TEST_CASE("charpoly of H is eta-independent for undirected graphs") {
    for (const auto& g : {cycle_graph(4), path_graph(3), complete_graph(4)}) {
        CHECK(charpoly_exact(hermitian_adjacency_exact(g, make_angle(1, 4))) ==
              charpoly_exact(hermitian_adjacency_exact(g, make_angle(2, 7))));
    }
}

TEST_CASE("regular rescaling d_i = c_i / k^(n-i)") {
    SplitMix64 rng(0xcafe);
    for (int rep = 0; rep < 6; ++rep) {
        // random orientation of K_4 (3-regular) and C_5 (2-regular)
        std::vector<int> digits;
        for (int i = 0; i < 6; ++i) digits.push_back(static_cast<int>(rng.below(3)));
        MixedGraph g = complete_graph(4, digits);
        const RationalAngle a = make_angle(1, 6);
        Poly<Cyclo> f = charpoly_exact(hermitian_adjacency_exact(g, a));
        Poly<Cyclo> gp = normalized_charpoly_exact(g, a);
        const int n = 4, k = 3;
        for (int i = 0; i <= n; ++i) {
            Rational kpow = 1;
            for (int e = 0; e < n - i; ++e) kpow *= k;
            CHECK(gp.coeff(static_cast<std::size_t>(i)) * Cyclo(kpow) == f.coeff(static_cast<std::size_t>(i)));
        }
    }
}

TEST_CASE("numeric eigensolver sanity") {
    SplitMix64 rng(0xeeee);
    // Hermitian: compare trace identities
    std::size_t n = 12;
    Matrix<cplx> a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = cplx(static_cast<double>(rng.below(9)) - 4.0, 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            a(i, j) = cplx(static_cast<double>(rng.below(7)) - 3.0, static_cast<double>(rng.below(7)) - 3.0);
            a(j, i) = std::conj(a(i, j));
        }
    }
    HermitianEigen he = jacobi_hermitian(a);
    double tr = 0.0, tr2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) tr += a(i, i).real();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) tr2 += std::norm(a(i, j));
    double sum = 0.0, sum2 = 0.0;
    for (double v : he.values) {
        sum += v;
        sum2 += v * v;
    }
    CHECK(std::abs(sum - tr) < 1e-9);
    CHECK(std::abs(sum2 - tr2) < 1e-8);
    // residuals
    for (std::size_t c = 0; c < n; ++c) {
        double res = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            cplx acc(0.0, 0.0);
            for (std::size_t k = 0; k < n; ++k) acc += a(r, k) * he.vectors(k, c);
            res = std::max(res, std::abs(acc - he.values[c] * he.vectors(r, c)));
        }
        CHECK(res < 1e-9);
    }

    // unitary: eigenvalues of U(C_3) are the cube roots of unity, twice
    MixedGraph c3 = cycle_graph(3);
    ArcOrdering arcs(c3);
    std::vector<cplx> ev = eigenvalues_normal(time_evolution_numeric(c3, arcs, 0.0));
    REQUIRE(ev.size() == 6);
    for (const cplx& lam : ev) {
        CHECK(std::abs(std::abs(lam) - 1.0) < 1e-12);
        CHECK(std::abs(std::pow(lam, 3) - cplx(1.0, 0.0)) < 1e-10);
    }
}
