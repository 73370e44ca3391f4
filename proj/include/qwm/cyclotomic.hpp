#pragma once

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "qwm/poly.hpp"
#include "qwm/rational.hpp"

namespace qwm {

unsigned totient(unsigned n);
std::vector<unsigned> divisors(unsigned n);

/// The d-th cyclotomic polynomial: monic, integer coefficients, degree
/// totient(d). Computed by dividing x^d - 1 by the lower-order factors;
/// cached per thread.
const Poly<Rational>& cyclotomic_polynomial(unsigned d);

/// Angle eta = 2*pi * num/den, kept reduced with 0 <= num < den.
struct RationalAngle {
    long num = 0;
    long den = 1;

    friend bool operator==(const RationalAngle&, const RationalAngle&) = default;
};

RationalAngle make_angle(long num, long den);
double angle_radians(const RationalAngle& a);

/// Either an exact angle (fraction of a full turn) or a float angle in
/// radians. Float angles only ever flow through the numeric pipeline.
using EtaAngle = std::variant<RationalAngle, double>;

inline bool is_rational_angle(const EtaAngle& a) { return std::holds_alternative<RationalAngle>(a); }
double angle_radians(const EtaAngle& a);

/// Element of the cyclotomic field Q(zeta_m), stored as rational coordinates
/// in the power basis 1, zeta_m, ..., zeta_m^(phi(m)-1), reduced mod Phi_m.
/// The representation is canonical: two elements with the same conductor are
/// equal iff their coordinate vectors are equal. Values are immutable in
/// spirit; all operations return fresh elements, so sharing across threads
/// is safe.
class Cyclo {
public:
    Cyclo() : m_(1), c_{Rational(0)} {}
    Cyclo(long v) : m_(1), c_{Rational(v)} {}
    Cyclo(const Rational& v) : m_(1), c_{v} {}

    /// zeta_m^power (power may be negative), represented at conductor m.
    static Cyclo zeta(unsigned m, long power = 1);

    /// Coordinates must have length phi(m) and are taken as already reduced.
    static Cyclo from_coords(unsigned m, std::vector<Rational> coords);

    unsigned conductor() const { return m_; }
    const std::vector<Rational>& coords() const { return c_; }

    bool is_zero() const;
    /// True iff the element lies in Q, i.e. all non-constant coordinates vanish.
    bool is_rational() const;
    /// The value as a rational; requires is_rational().
    Rational rational_value() const;
    /// Membership in Z[zeta_m]: every power-basis coordinate is an integer.
    /// The power basis is an integral basis for cyclotomic fields, so this
    /// decides algebraic integrality within the field.
    bool is_integral() const;

    Cyclo conj() const;
    Cyclo inv() const;

    /// Field automorphism zeta_m -> zeta_m^j; requires gcd(j, m) = 1.
    /// conj() is the special case j = m-1.
    Cyclo galois(long j) const;

    std::complex<double> to_complex() const;
    std::string str() const;

    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(const Cyclo& o);

    friend Cyclo operator+(Cyclo a, const Cyclo& b) { a += b; return a; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { a -= b; return a; }
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);

    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    /// Fused accumulate: *this += a * b. Hot path of the exact matrix kernels.
    void add_mul(const Cyclo& a, const Cyclo& b);

private:
    unsigned m_;
    std::vector<Rational> c_;

    std::vector<Rational> coords_at(unsigned target) const;
};

inline Cyclo scalar_inverse(const Cyclo& e) { return e.inv(); }

inline Cyclo conj_scalar(const Cyclo& e) { return e.conj(); }
inline Rational conj_scalar(const Rational& q) { return q; }
inline std::complex<double> conj_scalar(const std::complex<double>& z) { return std::conj(z); }

/// e^(i*eta) for a rational angle: exactly zeta_den^num.
Cyclo unit_from_angle(const RationalAngle& a);
/// Same, but rejects float angles with Errc::NumericAngle.
Cyclo unit_from_angle(const EtaAngle& a);

std::string scalar_str(const Cyclo& e);
std::string scalar_str(const Rational& q);
std::string scalar_str(const std::complex<double>& z);

} // namespace qwm
