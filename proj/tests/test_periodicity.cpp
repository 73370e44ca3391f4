#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "qwm/periodicity.hpp"
#include "qwm/rng.hpp"
#include "qwm/walk.hpp"

using namespace qwm;

TEST_CASE("necessary conditions") {
    CHECK_FALSE(check_2nk(complete_graph(4)));   // 8/3
    CHECK(check_2nk(complete_bipartite(3, 3)));  // 12/3 = 4
    CHECK(check_2nk(hamming_graph(3, 3)));       // 54/6 = 9

    CHECK(check_16t(hamming_graph(3, 3)));      // 16*27/216 = 2
    CHECK(check_16t(complete_tripartite(2)));   // 16*8/64 = 2
    CHECK_FALSE(check_16t(complete_graph(4)));  // 64/27

    CHECK_THROWS_AS((void)check_2nk(path_graph(3)), Error);
    try {
        (void)check_16t(complete_graph(3, {1, 0, 0}));
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotUndirected);
    }
}

TEST_CASE("rationalize_root") {
    auto i_frac = rationalize_root(cplx(0.0, 1.0));
    REQUIRE(i_frac.has_value());
    CHECK(i_frac->num == 1);
    CHECK(i_frac->den == 4);

    auto third = rationalize_root(std::polar(1.0, 2.0 * M_PI / 3.0));
    REQUIRE(third.has_value());
    CHECK(third->num == 1);
    CHECK(third->den == 3);

    // 1 radian: no convergent with q <= 10^4 lands within 1e-9
    CHECK_FALSE(rationalize_root(std::polar(1.0, 1.0)).has_value());
    // off the unit circle
    CHECK_FALSE(rationalize_root(cplx(0.5, 0.0)).has_value());
    // angle just below a full turn
    auto wrap = rationalize_root(std::polar(1.0, 2.0 * M_PI * (1.0 - 1e-13)));
    REQUIRE(wrap.has_value());
    CHECK(wrap->den == 1);
}

TEST_CASE("cyclotomic product factorization") {
    // x^6 - 2x^3 + 1 = Phi_1^2 Phi_3^2
    Poly<Rational> psi_c3;
    psi_c3.c = {Rational(1), Rational(0), Rational(0), Rational(-2), Rational(0), Rational(0), Rational(1)};
    auto f = is_cyclotomic_product(psi_c3);
    REQUIRE(f.has_value());
    CHECK(f->factors == std::vector<std::pair<unsigned, unsigned>>{{1, 2}, {3, 2}});

    // Psi(K_{2,2}) from the normalized spectrum {1, 0, 0, -1}:
    // (x-1)^2 (x+1)^2 (x^2+1)^2 = Phi_1^2 Phi_2^2 Phi_4^2
    Poly<Rational> g_k22;
    g_k22.c = {Rational(0), Rational(0), Rational(-1), Rational(0), Rational(1)}; // x^4 - x^2
    Poly<Rational> psi_k22 = inherited_factor(g_k22, 4);
    auto fk = is_cyclotomic_product(psi_k22);
    REQUIRE(fk.has_value());
    CHECK(fk->factors == std::vector<std::pair<unsigned, unsigned>>{{1, 2}, {2, 2}, {4, 2}});

    // x^2 - 3x + 1 has real roots off the unit circle
    Poly<Rational> off;
    off.c = {Rational(1), Rational(-3), Rational(1)};
    CHECK_FALSE(is_cyclotomic_product(off).has_value());

    // error paths
    Poly<Rational> not_monic;
    not_monic.c = {Rational(1), Rational(2)};
    CHECK_THROWS_AS((void)is_cyclotomic_product(not_monic), Error);
    Poly<Rational> not_integer;
    not_integer.c = {make_rational(1, 2), Rational(1)};
    CHECK_THROWS_AS((void)is_cyclotomic_product(not_integer), Error);
}

TEST_CASE("algebraic integer coefficients of Psi") {
    // mixed triangle, one forward arc, eta = 2*pi/3: periodic, so Psi must
    // live in Z[zeta_3]
    MixedGraph mc3 = cycle_graph(3, {1, 0, 0});
    Poly<Cyclo> psi = inherited_factor(normalized_charpoly_exact(mc3, make_angle(1, 3)), 3);
    CHECK(algebraic_integer_coefficients(psi));

    // K_4 at eta = pi/2: alpha_{2n-2} = 4 - 8/3 is not an algebraic integer
    Poly<Cyclo> psi_k4 = inherited_factor(normalized_charpoly_exact(complete_graph(4), make_angle(1, 4)), 4);
    CHECK_FALSE(algebraic_integer_coefficients(psi_k4));

    // any monic integer charpoly scaled by 1 passes
    Poly<Cyclo> simple;
    simple.c = {Cyclo(-1), Cyclo(0), Cyclo(1)};
    CHECK(algebraic_integer_coefficients(simple));
}

TEST_CASE("galois norm") {
    // p = (x - zeta_5)(coefficients in Q(zeta_5)); norm = Phi_5 * (x-1)^... :
    // product over the four conjugates of (x - zeta_5^j) = Phi_5(x)
    Poly<Cyclo> p;
    p.c = {-Cyclo::zeta(5), Cyclo(1)};
    Poly<Rational> norm = galois_norm(p);
    CHECK(norm == cyclotomic_polynomial(5));
}

TEST_CASE("decide: worked instances") {
    DecideOptions opts;
    opts.verify_minimality = true;

    auto c3 = decide_periodicity(cycle_graph(3), EtaAngle(make_angle(1, 4)), opts);
    CHECK(c3.verdict == Verdict::Periodic);
    CHECK(c3.tau == 3);
    CHECK(c3.method == Method::CyclotomicFactorization);

    auto c3f = decide_periodicity(cycle_graph(3), EtaAngle(0.77), opts);
    CHECK(c3f.verdict == Verdict::Periodic);
    CHECK(c3f.tau == 3);

    auto k4 = decide_periodicity(complete_graph(4), EtaAngle(make_angle(1, 4)), opts);
    CHECK(k4.verdict == Verdict::NotPeriodic);
    CHECK(k4.method == Method::NecessaryCondition);
    CHECK(k4.cond_2nk == CondStatus::Fail);

    auto p2 = decide_periodicity(path_graph(2), EtaAngle(make_angle(0, 1)), opts);
    CHECK(p2.verdict == Verdict::Periodic);
    CHECK(p2.tau == 2);

    // P_3: irregular tree, periodic with tau = 4
    auto p3 = decide_periodicity(path_graph(3), EtaAngle(make_angle(0, 1)), opts);
    CHECK(p3.verdict == Verdict::Periodic);
    CHECK(p3.tau == 4);

    // properly mixed triangle at a float angle: honest numeric outcome
    auto mixed_float = decide_periodicity(cycle_graph(3, {1, 0, 0}), EtaAngle(1.0), opts);
    CHECK(mixed_float.verdict == Verdict::UndecidedNumeric);

    // mixed pentagon at eta = 2pi/5 exercises the galois-norm route
    auto mc5 = decide_periodicity(cycle_graph(5, {1, 0, 0, 0, 0}), EtaAngle(make_angle(1, 5)), opts);
    CHECK(mc5.verdict == Verdict::Periodic);
    CHECK(mc5.method == Method::ExactPowerCheck);
}

TEST_CASE("decide: eigen summary is consistent") {
    auto rep = decide_periodicity(cycle_graph(3), EtaAngle(make_angle(0, 1)), {});
    unsigned total = 0;
    for (const auto& e : rep.eigen_summary) total += e.count;
    CHECK(total == 6); // 2m eigenvalues accounted for
    unsigned long long lcm_orders = 1;
    for (const auto& e : rep.eigen_summary)
        if (e.is_root_of_unity) lcm_orders = std::lcm(lcm_orders, e.order);
    CHECK(lcm_orders == rep.tau);
}

TEST_CASE("soundness: Periodic verdicts satisfy U^tau = I with minimal tau") {
    SplitMix64 rng(0x50f7);
    int periodic_seen = 0;
    for (int rep = 0; rep < 30; ++rep) {
        MixedGraph g = random_connected_mixed_graph(rng, 2, 5);
        RationalAngle a = make_angle(static_cast<long>(rng.below(4)), 4);
        auto r = decide_periodicity(g, EtaAngle(a), {});
        if (r.verdict != Verdict::Periodic) continue;
        ++periodic_seen;
        ArcOrdering arcs(g);
        Matrix<Cyclo> u = time_evolution_exact(g, arcs, g.undirected() ? make_angle(0, 1) : a);
        CHECK(kernels::equals_identity(kernels::matpow(u, r.tau)));
        CHECK(kernels::equals_identity(kernels::matpow(u, 2 * r.tau)));
        for (unsigned long long s = 1; s < r.tau; ++s)
            CHECK_FALSE(kernels::equals_identity(kernels::matpow(u, s)));
    }
    CHECK(periodic_seen > 0);
}

TEST_CASE("agreement: exact and numeric verdicts coincide where both apply") {
    SplitMix64 rng(0xa9ee);
    DecideOptions numeric_opts;
    numeric_opts.force_numeric = true;
    numeric_opts.verify_minimality = true;
    for (int rep = 0; rep < 25; ++rep) {
        MixedGraph g = random_connected_mixed_graph(rng, 2, 5);
        for (long num : {0L, 1L}) {
            RationalAngle a = make_angle(num, 4); // eta in {0, pi/2}
            auto exact = decide_periodicity(g, EtaAngle(a), {});
            auto numeric = decide_periodicity(g, EtaAngle(a), numeric_opts);
            if (exact.verdict == Verdict::Periodic) {
                CHECK(numeric.verdict == Verdict::Periodic);
                CHECK(numeric.tau == exact.tau);
            } else if (exact.verdict == Verdict::NotPeriodic &&
                       exact.method == Method::NecessaryCondition) {
                CHECK(numeric.verdict == Verdict::NotPeriodic);
            } else {
                // exact non-periodicity shows up numerically as an
                // unmatched eigenvalue
                CHECK(numeric.verdict != Verdict::Periodic);
            }
        }
    }
}

TEST_CASE("no Periodic verdict ever contradicts a necessary condition") {
    SplitMix64 rng(0xc0ffee);
    for (int rep = 0; rep < 40; ++rep) {
        MixedGraph g = random_connected_mixed_graph(rng, 2, 6);
        auto r = decide_periodicity(g, EtaAngle(make_angle(1, 6)), {});
        if (r.verdict == Verdict::Periodic) {
            CHECK(r.cond_2nk != CondStatus::Fail);
            CHECK(r.cond_16t != CondStatus::Fail);
        }
    }
}

TEST_CASE("report serializes to the documented JSON shape") {
    auto rep = decide_periodicity(cycle_graph(3), EtaAngle(make_angle(0, 1)), {});
    nlohmann::json j = rep.to_json();
    CHECK(j["verdict"] == "Periodic");
    CHECK(j["tau"] == 3);
    CHECK(j["method"] == "CyclotomicFactorization");
    CHECK(j["conditions"]["2n_over_k"] == "pass");
    CHECK(j["conditions"]["16t_over_k3"] == "pass");
    CHECK(j["eigen_orders"].is_array());

    auto k4 = decide_periodicity(complete_graph(4), EtaAngle(make_angle(0, 1)), {});
    nlohmann::json jk = k4.to_json();
    CHECK(jk["tau"].is_null());
    CHECK(jk["verdict"] == "NotPeriodic");
}

TEST_CASE("tau_max cutoff reports UndecidedNumeric") {
    DecideOptions opts;
    opts.tau_max = 2; // C_3 needs tau = 3
    auto r = decide_periodicity(cycle_graph(3), EtaAngle(make_angle(0, 1)), opts);
    CHECK(r.verdict == Verdict::UndecidedNumeric);
}
