#pragma once

#include <gmpxx.h>

#include <string>

#include "qwm/errors.hpp"

namespace qwm {

// Exact arbitrary-precision scalars. Everything exact in this library is
// built on top of these two.
using Rational = mpq_class;
using BigInt = mpz_class;

/// num/den as a canonical (reduced, positive-denominator) rational.
inline Rational make_rational(long num, long den = 1) {
    if (den == 0) fail(Errc::DivisionByZero, "rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool rat_is_integer(const Rational& q) {
    return mpz_cmp_ui(q.get_den().get_mpz_t(), 1) == 0;
}

inline std::string rat_str(const Rational& q) { return q.get_str(); }

inline double rat_to_double(const Rational& q) { return q.get_d(); }

inline Rational scalar_inverse(const Rational& q) {
    if (q == 0) fail(Errc::DivisionByZero, "inverse of zero");
    return Rational(1) / q;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// 2^e as a rational, e may be negative.
inline Rational pow2_rational(long e) {
    Rational r(1);
    if (e >= 0) {
        mpz_mul_2exp(r.get_num().get_mpz_t(), r.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    } else {
        mpz_mul_2exp(r.get_den().get_mpz_t(), r.get_den().get_mpz_t(), static_cast<unsigned long>(-e));
    }
    return r;
}

} // namespace qwm
