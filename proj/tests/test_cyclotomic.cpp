#include <complex>

#include "doctest.h"
#include "oracles.hpp"
#include "qwm/cyclotomic.hpp"

using namespace qwm;

TEST_CASE("totient and divisors") {
    CHECK(totient(1) == 1);
    CHECK(totient(4) == 2);
    CHECK(totient(6) == 2);
    CHECK(totient(12) == 4);
    CHECK(totient(13) == 12);
    CHECK(divisors(12) == std::vector<unsigned>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("cyclotomic polynomials: small cases") {
    // Phi_1 = x - 1
    Poly<Rational> p1;
    p1.c = {Rational(-1), Rational(1)};
    CHECK(cyclotomic_polynomial(1) == p1);

    // Phi_4 = x^2 + 1
    Poly<Rational> p4;
    p4.c = {Rational(1), Rational(0), Rational(1)};
    CHECK(cyclotomic_polynomial(4) == p4);

    // Phi_6 = x^2 - x + 1, cross-checked against the numeric product over
    // primitive sixth roots.
    Poly<Rational> p6;
    p6.c = {Rational(1), Rational(-1), Rational(1)};
    CHECK(cyclotomic_polynomial(6) == p6);
    CHECK(cyclotomic_polynomial(6) == oracles::numeric_cyclotomic(6));
}

TEST_CASE("cyclotomic polynomials match the numeric oracle") {
    for (unsigned d : {2u, 3u, 5u, 8u, 9u, 10u, 12u, 15u, 20u})
        CHECK(cyclotomic_polynomial(d) == oracles::numeric_cyclotomic(d));
}

TEST_CASE("product of Phi_d over divisors equals x^n - 1") {
    for (unsigned n = 1; n <= 30; ++n) {
        Poly<Rational> prod = Poly<Rational>::constant(Rational(1));
        for (unsigned d : divisors(n)) prod = prod * cyclotomic_polynomial(d);
        Poly<Rational> expected = Poly<Rational>::monomial(Rational(1), n);
        expected -= Poly<Rational>::constant(Rational(1));
        CHECK(prod == expected);
    }
}

TEST_CASE("zeta arithmetic basics") {
    // i^2 = -1
    CHECK(Cyclo::zeta(4) * Cyclo::zeta(4) == Cyclo(-1));
    // 1 + zeta_3 + zeta_3^2 = 0
    CHECK(Cyclo(1) + Cyclo::zeta(3) + Cyclo::zeta(3, 2) == Cyclo(0));
    // inv(zeta_5) = zeta_5^4, and the product is 1
    CHECK(Cyclo::zeta(5).inv() == Cyclo::zeta(5, 4));
    CHECK(Cyclo::zeta(5) * Cyclo::zeta(5).inv() == Cyclo(1));
}

TEST_CASE("mixed conductors lift to the lcm") {
    Cyclo a = Cyclo::zeta(4);  // i
    Cyclo b = Cyclo::zeta(6);
    Cyclo prod = a * b;        // zeta_12^(3+2)
    CHECK(prod == Cyclo::zeta(12, 5));
    CHECK(Cyclo(make_rational(1, 2)) + Cyclo(make_rational(1, 2)) == Cyclo(1));
    // same value at different conductors compares equal
    CHECK(Cyclo::zeta(6, 3) == Cyclo(-1));
}

TEST_CASE("unit_from_angle") {
    CHECK(unit_from_angle(make_angle(1, 4)) == Cyclo::zeta(4)); // eta = pi/2
    CHECK(unit_from_angle(make_angle(1, 6)) == Cyclo::zeta(6)); // eta = pi/3
    CHECK(unit_from_angle(make_angle(0, 1)) == Cyclo(1));
    CHECK_THROWS_AS((void)unit_from_angle(EtaAngle(1.0)), Error);
    for (long num : {0L, 1L, 3L, 7L}) {
        auto u = unit_from_angle(make_angle(num, 12));
        CHECK(std::abs(std::abs(u.to_complex()) - 1.0) < 1e-12);
    }
}

TEST_CASE("to_complex on known values") {
    CHECK(std::abs(Cyclo::zeta(4).to_complex() - std::complex<double>(0.0, 1.0)) < 1e-15);
    CHECK(std::abs(Cyclo::zeta(6).to_complex() - std::complex<double>(0.5, std::sqrt(3.0) / 2.0)) < 1e-12);
    CHECK(std::abs(Cyclo::zeta(2).to_complex() - std::complex<double>(-1.0, 0.0)) < 1e-15);
}

TEST_CASE("field axioms on random elements") {
    SplitMix64 rng(0x11223344);
    for (unsigned m : {3u, 4u, 5u, 6u, 8u, 12u}) {
        for (int rep = 0; rep < 12; ++rep) {
            Cyclo a = oracles::random_cyclo(rng, m);
            Cyclo b = oracles::random_cyclo(rng, m);
            Cyclo c = oracles::random_cyclo(rng, m);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) CHECK(a * a.inv() == Cyclo(1));
        }
    }
}

TEST_CASE("conjugation is multiplicative and matches complex conjugation") {
    SplitMix64 rng(0x55667788);
    for (unsigned m : {5u, 8u, 12u}) {
        for (int rep = 0; rep < 8; ++rep) {
            Cyclo a = oracles::random_cyclo(rng, m);
            Cyclo b = oracles::random_cyclo(rng, m);
            CHECK((a * b).conj() == a.conj() * b.conj());
            CHECK(std::abs(a.conj().to_complex() - std::conj(a.to_complex())) < 1e-10);
        }
    }
}

TEST_CASE("algebraic integer membership") {
    CHECK(Cyclo::zeta(4).is_integral());
    CHECK_FALSE(Cyclo(make_rational(1, 2)).is_integral());
    CHECK((Cyclo(1) + Cyclo::zeta(3)).is_integral());
    CHECK_FALSE(((Cyclo(1) + Cyclo::zeta(3)) * Cyclo(make_rational(1, 2))).is_integral());
}

TEST_CASE("algebraic integer membership agrees with the minimal-polynomial oracle") {
    CHECK(oracles::minpoly_integral(Cyclo::zeta(4)));
    CHECK_FALSE(oracles::minpoly_integral(Cyclo(make_rational(1, 2))));
    CHECK(oracles::minpoly_integral(Cyclo(1) + Cyclo::zeta(3)));
    CHECK_FALSE(oracles::minpoly_integral((Cyclo(1) + Cyclo::zeta(3)) * Cyclo(make_rational(1, 2))));

    SplitMix64 rng(0xabcdef);
    for (int rep = 0; rep < 40; ++rep) {
        unsigned m = 2 + static_cast<unsigned>(rng.below(7)); // conductors 2..8
        Cyclo e = oracles::random_cyclo(rng, m);
        CHECK(e.is_integral() == oracles::minpoly_integral(e));
    }
}

TEST_CASE("ring of algebraic integers is closed under + and *") {
    SplitMix64 rng(0x9999);
    for (int rep = 0; rep < 20; ++rep) {
        unsigned m = 2 + static_cast<unsigned>(rng.below(11));
        Cyclo a = oracles::random_integral_cyclo(rng, m);
        Cyclo b = oracles::random_integral_cyclo(rng, m);
        CHECK((a + b).is_integral());
        CHECK((a * b).is_integral());
    }
}

TEST_CASE("galois automorphisms") {
    Cyclo z = Cyclo::zeta(12);
    CHECK(z.galois(5) == Cyclo::zeta(12, 5));
    CHECK(z.galois(11) == z.conj());
    CHECK_THROWS_AS((void)z.galois(4), Error);
    // automorphism property on a composite element
    Cyclo e = Cyclo(2) + Cyclo(3) * z + z * z;
    CHECK(e.galois(7) * e.galois(7) == (e * e).galois(7));
}

TEST_CASE("division by zero is rejected") {
    CHECK_THROWS_AS((void)Cyclo(0).inv(), Error);
    try {
        (void)Cyclo(0).inv();
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DivisionByZero);
    }
}

TEST_CASE("make_angle normalizes") {
    CHECK(make_angle(5, 4).num == 1);
    CHECK(make_angle(-1, 4).num == 3);
    CHECK(make_angle(2, 8).den == 4);
    CHECK_THROWS_AS((void)make_angle(1, 0), Error);
}
