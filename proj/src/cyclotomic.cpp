#include "qwm/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace qwm {

unsigned totient(unsigned n) {
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<unsigned> divisors(unsigned n) {
    std::vector<unsigned> small, large;
    for (unsigned d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

const Poly<Rational>& cyclotomic_polynomial(unsigned d) {
    if (d == 0) fail(Errc::BadParameters, "cyclotomic polynomial needs d >= 1");
    thread_local std::map<unsigned, Poly<Rational>> cache;
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;

    // x^d - 1 divided by the product of Phi_e over proper divisors e of d.
    Poly<Rational> num = Poly<Rational>::monomial(Rational(1), d);
    num -= Poly<Rational>::constant(Rational(1));
    for (unsigned e : divisors(d)) {
        if (e == d) continue;
        auto [q, r] = poly_divmod(num, cyclotomic_polynomial(e));
        if (!r.is_zero()) fail(Errc::InternalCheckFailed, "cyclotomic division left a remainder");
        num = std::move(q);
    }
    auto [pos, inserted] = cache.emplace(d, std::move(num));
    (void)inserted;
    return pos->second;
}

RationalAngle make_angle(long num, long den) {
    if (den == 0) fail(Errc::BadParameters, "angle denominator must be nonzero");
    if (den < 0) {
        den = -den;
        num = -num;
    }
    num %= den;
    if (num < 0) num += den;
    long g = std::gcd(num, den);
    if (g == 0) g = 1;
    RationalAngle a;
    a.num = num / g;
    a.den = den / g;
    return a;
}

double angle_radians(const RationalAngle& a) {
    return 2.0 * M_PI * static_cast<double>(a.num) / static_cast<double>(a.den);
}

double angle_radians(const EtaAngle& a) {
    if (auto* r = std::get_if<RationalAngle>(&a)) return angle_radians(*r);
    return std::get<double>(a);
}

namespace {

struct Ctx {
    unsigned m = 1;
    unsigned phi = 1;
    std::vector<Rational> modulus; // Phi_m coefficients, size phi+1, monic
};

const Ctx& ctx_for(unsigned m) {
    thread_local std::map<unsigned, Ctx> cache;
    auto it = cache.find(m);
    if (it == cache.end()) {
        Ctx c;
        c.m = m;
        const Poly<Rational>& phi = cyclotomic_polynomial(m);
        c.phi = static_cast<unsigned>(phi.degree());
        c.modulus = phi.c;
        it = cache.emplace(m, std::move(c)).first;
    }
    return it->second;
}

// Reduce a coefficient vector (in powers of zeta_m) mod Phi_m in place and
// resize it to phi(m). Uses x^phi = -sum_{j<phi} Phi[j] x^j since Phi is monic.
void reduce_mod_phi(std::vector<Rational>& v, const Ctx& cx) {
    for (std::size_t i = v.size(); i-- > cx.phi;) {
        if (v[i] == 0) continue;
        Rational lead = v[i];
        v[i] = 0;
        for (unsigned j = 0; j < cx.phi; ++j) v[i - cx.phi + j] -= lead * cx.modulus[j];
    }
    v.resize(cx.phi, Rational(0));
}

} // namespace

Cyclo Cyclo::zeta(unsigned m, long power) {
    if (m == 0) fail(Errc::BadParameters, "conductor must be positive");
    long k = power % static_cast<long>(m);
    if (k < 0) k += static_cast<long>(m);
    if (m == 1) return Cyclo(1);
    const Ctx& cx = ctx_for(m);
    std::vector<Rational> v(m, Rational(0));
    v[static_cast<std::size_t>(k)] = 1;
    reduce_mod_phi(v, cx);
    return from_coords(m, std::move(v));
}

Cyclo Cyclo::from_coords(unsigned m, std::vector<Rational> coords) {
    Cyclo e;
    e.m_ = m;
    e.c_ = std::move(coords);
    if (e.c_.size() != ctx_for(m).phi) fail(Errc::BadParameters, "coordinate vector has wrong length");
    return e;
}

bool Cyclo::is_zero() const {
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (std::size_t j = 1; j < c_.size(); ++j)
        if (c_[j] != 0) return false;
    return true;
}

Rational Cyclo::rational_value() const {
    if (!is_rational()) fail(Errc::BadParameters, "element is not rational");
    return c_[0];
}

bool Cyclo::is_integral() const {
    for (const auto& v : c_)
        if (!rat_is_integer(v)) return false;
    return true;
}

std::vector<Rational> Cyclo::coords_at(unsigned target) const {
    if (target == m_) return c_;
    if (target % m_ != 0) fail(Errc::InternalCheckFailed, "conductor lift must be a multiple");
    const Ctx& cx = ctx_for(target);
    std::vector<Rational> v(target, Rational(0));
    const unsigned step = target / m_;
    for (std::size_t j = 0; j < c_.size(); ++j) v[j * step] += c_[j];
    reduce_mod_phi(v, cx);
    return v;
}

Cyclo Cyclo::conj() const {
    if (m_ <= 2) return *this;
    const Ctx& cx = ctx_for(m_);
    std::vector<Rational> v(m_, Rational(0));
    v[0] = c_[0];
    for (std::size_t j = 1; j < c_.size(); ++j) v[m_ - j] += c_[j];
    reduce_mod_phi(v, cx);
    return from_coords(m_, std::move(v));
}

Cyclo Cyclo::galois(long j) const {
    long jj = j % static_cast<long>(m_);
    if (jj < 0) jj += static_cast<long>(m_);
    if (std::gcd(static_cast<unsigned long>(jj), static_cast<unsigned long>(m_)) != 1)
        fail(Errc::BadParameters, "galois exponent must be coprime to the conductor");
    if (m_ <= 2 || jj == 1) return *this;
    const Ctx& cx = ctx_for(m_);
    std::vector<Rational> v(m_, Rational(0));
    for (std::size_t p = 0; p < c_.size(); ++p) {
        if (c_[p] == 0) continue;
        v[(p * static_cast<std::size_t>(jj)) % m_] += c_[p];
    }
    reduce_mod_phi(v, cx);
    return from_coords(m_, std::move(v));
}

Cyclo Cyclo::inv() const {
    if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero");
    if (m_ == 1) return Cyclo(scalar_inverse(c_[0]));

    // Extended Euclid in Q[x] against Phi_m. The invariant r_i = s_i * a
    // (mod Phi_m) yields the inverse once the remainder is a nonzero constant.
    Poly<Rational> r0 = cyclotomic_polynomial(m_);
    std::vector<Rational> self_coeffs = c_;
    Poly<Rational> r1(std::move(self_coeffs));
    Poly<Rational> s0 = Poly<Rational>::zero();
    Poly<Rational> s1 = Poly<Rational>::constant(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r2] = poly_divmod(r0, r1);
        Poly<Rational> s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.degree() != 0) fail(Errc::InternalCheckFailed, "gcd with cyclotomic modulus not constant");
    Poly<Rational> s = s0.scaled(scalar_inverse(r0.c[0]));
    std::vector<Rational> v = s.c;
    const Ctx& cx = ctx_for(m_);
    if (v.size() > cx.phi) reduce_mod_phi(v, cx);
    v.resize(cx.phi, Rational(0));
    return from_coords(m_, std::move(v));
}

std::complex<double> Cyclo::to_complex() const {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        double t = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(m_);
        acc += rat_to_double(c_[j]) * std::complex<double>(std::cos(t), std::sin(t));
    }
    return acc;
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    if (m_ == o.m_) {
        for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
        return *this;
    }
    unsigned L = std::lcm(m_, o.m_);
    std::vector<Rational> a = coords_at(L);
    std::vector<Rational> b = o.coords_at(L);
    for (std::size_t j = 0; j < a.size(); ++j) a[j] += b[j];
    m_ = L;
    c_ = std::move(a);
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
    *this += -o;
    return *this;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    if (a.m_ == 1 && b.m_ == 1) return Cyclo(a.c_[0] * b.c_[0]);
    unsigned L = std::lcm(a.m_, b.m_);
    std::vector<Rational> x = a.coords_at(L);
    std::vector<Rational> y = b.coords_at(L);
    std::vector<Rational> prod(2 * x.size(), Rational(0));
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (y[j] == 0) continue;
            prod[i + j] += x[i] * y[j];
        }
    }
    reduce_mod_phi(prod, ctx_for(L));
    return Cyclo::from_coords(L, std::move(prod));
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
    *this = *this * o;
    return *this;
}

void Cyclo::add_mul(const Cyclo& a, const Cyclo& b) {
    if (m_ == 1 && a.m_ == 1 && b.m_ == 1) {
        c_[0] += a.c_[0] * b.c_[0];
        return;
    }
    *this += a * b;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    if (a.m_ == b.m_) return a.c_ == b.c_;
    unsigned L = std::lcm(a.m_, b.m_);
    return a.coords_at(L) == b.coords_at(L);
}

std::string Cyclo::str() const {
    if (is_rational()) return rat_str(c_[0]);
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (j == 0) {
            os << rat_str(c_[0]);
        } else {
            if (c_[j] != 1) os << "(" << rat_str(c_[j]) << ")";
            os << "z" << m_ << "^" << j;
        }
    }
    if (first) os << "0";
    return os.str();
}

Cyclo unit_from_angle(const RationalAngle& a) { return Cyclo::zeta(static_cast<unsigned>(a.den), a.num); }

Cyclo unit_from_angle(const EtaAngle& a) {
    if (!is_rational_angle(a)) fail(Errc::NumericAngle, "float angles have no exact representation");
    return unit_from_angle(std::get<RationalAngle>(a));
}

std::string scalar_str(const Cyclo& e) { return e.str(); }
std::string scalar_str(const Rational& q) { return rat_str(q); }

std::string scalar_str(const std::complex<double>& z) {
    std::ostringstream os;
    os.precision(17);
    os << z.real() << "," << z.imag();
    return os.str();
}

} // namespace qwm
