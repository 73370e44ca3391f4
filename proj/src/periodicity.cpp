#include "qwm/periodicity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qwm/numeric_eigen.hpp"
#include "qwm/walk.hpp"

namespace qwm {

bool check_2nk(const MixedGraph& g) {
    auto k = g.regular_degree();
    if (!k) fail(Errc::NotRegular, "2n/k condition needs a regular graph");
    return (2LL * g.vertex_count()) % *k == 0;
}

bool check_16t(const MixedGraph& g) {
    auto k = g.regular_degree();
    if (!k) fail(Errc::NotRegular, "16t/k^3 condition needs a regular graph");
    if (!g.undirected()) fail(Errc::NotUndirected, "16t/k^3 condition needs an undirected graph");
    const long long k3 = static_cast<long long>(*k) * *k * *k;
    return (16LL * g.triangle_count()) % k3 == 0;
}

std::optional<Fraction> rationalize_root(cplx lambda, long q_max, double tol) {
    if (std::abs(std::abs(lambda) - 1.0) > tol) return std::nullopt;
    double x = std::arg(lambda) / (2.0 * M_PI);
    if (x < 0.0) x += 1.0;
    if (x >= 1.0) x -= 1.0;

    // Continued-fraction convergents of x; accept the first one whose root
    // of unity lands within tol of lambda.
    long double y = x;
    long h_prev = 0, h = 1; // numerators (h_{-2}, h_{-1})
    long q_prev = 1, q = 0; // denominators
    for (int iter = 0; iter < 64; ++iter) {
        const long double fl = std::floor(y);
        if (fl > static_cast<long double>(q_max)) break;
        const long a = static_cast<long>(fl);
        const long h_next = a * h + h_prev;
        const long q_next = a * q + q_prev;
        if (q_next > q_max || q_next < 0) break;
        h_prev = h;
        h = h_next;
        q_prev = q;
        q = q_next;
        if (q > 0) {
            long p = ((h % q) + q) % q;
            const double theta = 2.0 * M_PI * static_cast<double>(p) / static_cast<double>(q);
            if (std::abs(lambda - std::polar(1.0, theta)) <= tol) {
                Fraction f;
                f.num = p;
                f.den = q;
                return f;
            }
        }
        const long double frac = y - fl;
        if (frac <= 1e-18L) break;
        y = 1.0L / frac;
    }
    return std::nullopt;
}

namespace {

struct PartialFactorization {
    std::vector<std::pair<unsigned, unsigned>> factors;
    Poly<Rational> remainder; // monic; degree 0 iff fully factored
};

PartialFactorization cyclotomic_factor_partial(Poly<Rational> p) {
    PartialFactorization out;
    unsigned d = 0;
    while (p.degree() > 0) {
        ++d;
        const unsigned remaining = static_cast<unsigned>(p.degree());
        if (static_cast<unsigned long long>(d) > 2ULL * remaining * remaining) break;
        if (totient(d) > remaining) continue;
        unsigned mult = 0;
        for (;;) {
            auto [q, r] = poly_divmod(p, cyclotomic_polynomial(d));
            if (!r.is_zero()) break;
            p = std::move(q);
            ++mult;
        }
        if (mult > 0) out.factors.emplace_back(d, mult);
    }
    out.remainder = std::move(p);
    return out;
}

} // namespace

std::optional<CycloFactorization> is_cyclotomic_product(const Poly<Rational>& p) {
    if (!p.is_monic()) fail(Errc::NotMonic, "cyclotomic factorization needs a monic polynomial");
    for (const auto& c : p.c)
        if (!rat_is_integer(c)) fail(Errc::NotIntegerCoefficients, "cyclotomic factorization needs integer coefficients");
    PartialFactorization part = cyclotomic_factor_partial(p);
    if (part.remainder.degree() > 0) return std::nullopt;
    CycloFactorization f;
    f.factors = std::move(part.factors);
    return f;
}

bool algebraic_integer_coefficients(const Poly<Cyclo>& psi) {
    for (const auto& c : psi.c)
        if (!c.is_integral()) return false;
    return true;
}

Poly<Rational> galois_norm(const Poly<Cyclo>& p) {
    unsigned L = 1;
    for (const auto& c : p.c) L = static_cast<unsigned>(std::lcm(L, c.conductor()));

    Poly<Cyclo> norm = Poly<Cyclo>::constant(Cyclo(1));
    for (unsigned j = 1; j <= L; ++j) {
        if (std::gcd(j, L) != 1) continue;
        if (j == 1) {
            norm = norm * p;
            continue;
        }
        Poly<Cyclo> image = p;
        for (auto& c : image.c) c = c.galois(static_cast<long>(j));
        norm = norm * image;
    }

    std::vector<Rational> coeffs;
    coeffs.reserve(norm.c.size());
    for (const auto& c : norm.c) {
        if (!c.is_rational()) fail(Errc::InternalCheckFailed, "galois norm has an irrational coefficient");
        coeffs.push_back(c.rational_value());
    }
    return Poly<Rational>(std::move(coeffs));
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Periodic: return "Periodic";
        case Verdict::NotPeriodic: return "NotPeriodic";
        case Verdict::UndecidedNumeric: return "UndecidedNumeric";
    }
    return "?";
}

const char* method_name(Method m) {
    switch (m) {
        case Method::CyclotomicFactorization: return "CyclotomicFactorization";
        case Method::ExactPowerCheck: return "ExactPowerCheck";
        case Method::NumericRationalization: return "NumericRationalization";
        case Method::NecessaryCondition: return "NecessaryCondition";
    }
    return "?";
}

const char* cond_name(CondStatus c) {
    switch (c) {
        case CondStatus::Pass: return "pass";
        case CondStatus::Fail: return "fail";
        case CondStatus::NotApplicable: return "not-applicable";
    }
    return "?";
}

nlohmann::json PeriodicityReport::to_json() const {
    nlohmann::json orders = nlohmann::json::array();
    for (const auto& e : eigen_summary) {
        nlohmann::json entry;
        if (e.is_root_of_unity)
            entry["order"] = e.order;
        else
            entry["order"] = "non-unity";
        entry["count"] = e.count;
        orders.push_back(entry);
    }
    nlohmann::json j;
    j["verdict"] = verdict_name(verdict);
    if (verdict == Verdict::Periodic)
        j["tau"] = tau;
    else
        j["tau"] = nullptr;
    j["method"] = method_name(method);
    j["conditions"] = {{"2n_over_k", cond_name(cond_2nk)}, {"16t_over_k3", cond_name(cond_16t)}};
    j["eigen_orders"] = orders;
    if (!witness.empty()) j["witness"] = witness;
    return j;
}

std::string PeriodicityReport::summary() const {
    std::ostringstream os;
    os << verdict_name(verdict);
    if (verdict == Verdict::Periodic) os << "(tau=" << tau << ")";
    os << " via " << method_name(method);
    if (!witness.empty()) os << " [" << witness << "]";
    return os.str();
}

namespace {

std::vector<unsigned long long> prime_divisors(unsigned long long n) {
    std::vector<unsigned long long> out;
    for (unsigned long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// lcm with an explicit cap; nullopt means "exceeds cap".
std::optional<unsigned long long> lcm_capped(unsigned long long a, unsigned long long b,
                                             unsigned long long cap) {
    unsigned long long g = std::gcd(a, b);
    unsigned long long q = a / g;
    if (b != 0 && q > cap / b) return std::nullopt;
    unsigned long long l = q * b;
    if (l > cap) return std::nullopt;
    return l;
}

std::vector<EigenOrderEntry> summary_from_factors(const std::vector<std::pair<unsigned, unsigned>>& factors,
                                                  unsigned scale_down) {
    std::vector<EigenOrderEntry> out;
    for (const auto& [d, mult] : factors) {
        EigenOrderEntry e;
        e.is_root_of_unity = true;
        e.order = d;
        const unsigned total = mult * totient(d);
        if (scale_down > 1 && total % scale_down != 0)
            fail(Errc::InternalCheckFailed, "norm multiplicities are not a conjugate multiple");
        e.count = scale_down > 1 ? total / scale_down : total;
        out.push_back(e);
    }
    return out;
}

// Exact verification U^tau = I, plus optional minimality over the prime
// divisors. A failure of either is an internal bug: tau comes from the exact
// eigenvalue orders.
void verify_exact_power(const MixedGraph& g, const RationalAngle& eta, unsigned long long tau,
                        bool minimality) {
    ArcOrdering arcs(g);
    Matrix<Cyclo> u = time_evolution_exact(g, arcs, eta);
    if (!kernels::equals_identity(kernels::matpow(u, tau)))
        fail(Errc::InternalCheckFailed, "exact power check U^tau != I");
    if (minimality) {
        for (unsigned long long p : prime_divisors(tau)) {
            if (kernels::equals_identity(kernels::matpow(u, tau / p)))
                fail(Errc::InternalCheckFailed, "period not minimal");
        }
    }
}

PeriodicityReport decide_exact(const MixedGraph& g, const RationalAngle& eta, const DecideOptions& opts,
                               PeriodicityReport report) {
    const int n = g.vertex_count();
    const int m = g.edge_count();

    Poly<Cyclo> gp = normalized_charpoly_exact(g, eta);
    Poly<Cyclo> psi = inherited_factor(gp, n);

    if (!algebraic_integer_coefficients(psi)) {
        report.verdict = Verdict::NotPeriodic;
        report.method = Method::CyclotomicFactorization;
        report.witness = "inherited factor has a coefficient outside Z[zeta]";
        return report;
    }

    // Fold the birth factor so the polynomial under factorization is
    // exactly det(xI - U).
    Poly<Cyclo> pu;
    if (m >= n) {
        pu = psi * x2_minus_1_pow<Cyclo>(static_cast<unsigned long>(m - n));
    } else {
        auto [q, r] = poly_divmod(psi, x2_minus_1_pow<Cyclo>(static_cast<unsigned long>(n - m)));
        if (!r.is_zero()) fail(Errc::InternalCheckFailed, "(x^2-1)^(n-m) does not divide Psi");
        pu = std::move(q);
    }

    bool rational_coeffs = true;
    for (const auto& c : pu.c)
        if (!c.is_rational()) {
            rational_coeffs = false;
            break;
        }

    std::vector<std::pair<unsigned, unsigned>> factors;
    unsigned scale_down = 1;
    if (rational_coeffs) {
        report.method = Method::CyclotomicFactorization;
        std::vector<Rational> coeffs;
        for (const auto& c : pu.c) coeffs.push_back(c.rational_value());
        PartialFactorization part = cyclotomic_factor_partial(Poly<Rational>(std::move(coeffs)));
        if (part.remainder.degree() > 0) {
            report.verdict = Verdict::NotPeriodic;
            report.witness = "char. polynomial of U has a non-cyclotomic factor of degree " +
                             std::to_string(part.remainder.degree());
            report.eigen_summary = summary_from_factors(part.factors, 1);
            EigenOrderEntry rest;
            rest.is_root_of_unity = false;
            rest.count = static_cast<unsigned>(part.remainder.degree());
            report.eigen_summary.push_back(rest);
            return report;
        }
        factors = std::move(part.factors);
    } else {
        // Coefficients live in Q(zeta) proper: factor the Galois norm
        // instead. Embeddings preserve the order of a root of unity, so the
        // norm has the same order set, scaled multiplicities, and a
        // non-cyclotomic remainder iff U has a non-unity eigenvalue.
        report.method = Method::ExactPowerCheck;
        Poly<Rational> norm = galois_norm(pu);
        scale_down = static_cast<unsigned>(norm.degree() / pu.degree());
        for (const auto& c : norm.c) {
            if (!rat_is_integer(c)) {
                report.verdict = Verdict::NotPeriodic;
                report.witness = "galois norm of char. polynomial has a non-integer coefficient";
                return report;
            }
        }
        PartialFactorization part = cyclotomic_factor_partial(norm);
        if (part.remainder.degree() > 0) {
            report.verdict = Verdict::NotPeriodic;
            report.witness = "char. polynomial of U has a non-cyclotomic factor";
            report.eigen_summary = summary_from_factors(part.factors, scale_down);
            EigenOrderEntry rest;
            rest.is_root_of_unity = false;
            rest.count = static_cast<unsigned>(part.remainder.degree()) / scale_down;
            report.eigen_summary.push_back(rest);
            return report;
        }
        factors = std::move(part.factors);
    }

    unsigned long long tau = 1;
    for (const auto& [d, mult] : factors) {
        (void)mult;
        auto l = lcm_capped(tau, d, opts.tau_max);
        if (!l) {
            report.verdict = Verdict::UndecidedNumeric;
            report.witness = "period candidate exceeds tau_max";
            report.eigen_summary = summary_from_factors(factors, scale_down);
            return report;
        }
        tau = *l;
    }

    report.eigen_summary = summary_from_factors(factors, scale_down);
    verify_exact_power(g, eta, tau, opts.verify_minimality);
    report.verdict = Verdict::Periodic;
    report.tau = tau;
    return report;
}

PeriodicityReport decide_numeric(const MixedGraph& g, double eta, const DecideOptions& opts,
                                 PeriodicityReport report) {
    report.method = Method::NumericRationalization;
    ArcOrdering arcs(g);
    Matrix<cplx> u = time_evolution_numeric(g, arcs, eta);
    std::vector<cplx> lambdas = eigenvalues_normal(u);

    std::map<unsigned long long, unsigned> order_counts;
    unsigned off_circle = 0, unmatched = 0;
    unsigned long long tau = 1;
    bool overflow = false;
    for (const cplx& lam : lambdas) {
        if (std::abs(std::abs(lam) - 1.0) > opts.unit_tol) {
            ++off_circle;
            continue;
        }
        auto f = rationalize_root(lam, opts.q_max, opts.rationalize_tol);
        if (!f) {
            ++unmatched;
            continue;
        }
        order_counts[static_cast<unsigned long long>(f->den)]++;
        if (!overflow) {
            auto l = lcm_capped(tau, static_cast<unsigned long long>(f->den), opts.tau_max);
            if (!l)
                overflow = true;
            else
                tau = *l;
        }
    }

    for (const auto& [order, count] : order_counts) {
        EigenOrderEntry e;
        e.is_root_of_unity = true;
        e.order = order;
        e.count = count;
        report.eigen_summary.push_back(e);
    }
    if (off_circle + unmatched > 0) {
        EigenOrderEntry e;
        e.is_root_of_unity = false;
        e.count = off_circle + unmatched;
        report.eigen_summary.push_back(e);
    }

    if (off_circle > 0) {
        report.verdict = Verdict::NotPeriodic;
        report.witness = "an eigenvalue lies off the unit circle (numeric certificate)";
        return report;
    }
    if (unmatched > 0) {
        report.verdict = Verdict::UndecidedNumeric;
        report.witness = "an eigenvalue matches no root of unity with q <= q_max";
        return report;
    }
    if (overflow) {
        report.verdict = Verdict::UndecidedNumeric;
        report.witness = "period candidate exceeds tau_max";
        return report;
    }

    if (kernels::max_abs_diff_identity(kernels::matpow(u, tau)) > opts.power_tol) {
        report.verdict = Verdict::UndecidedNumeric;
        report.witness = "numeric power check failed at the candidate period";
        return report;
    }
    if (opts.verify_minimality) {
        bool reduced = true;
        while (reduced) {
            reduced = false;
            for (unsigned long long p : prime_divisors(tau)) {
                if (kernels::max_abs_diff_identity(kernels::matpow(u, tau / p)) <= opts.power_tol) {
                    tau /= p;
                    reduced = true;
                    break;
                }
            }
        }
    }
    report.verdict = Verdict::Periodic;
    report.tau = tau;
    return report;
}

} // namespace

PeriodicityReport decide_periodicity(const MixedGraph& g, const EtaAngle& eta, const DecideOptions& opts) {
    PeriodicityReport report;

    const auto k = g.regular_degree();
    if (k) {
        report.cond_2nk = check_2nk(g) ? CondStatus::Pass : CondStatus::Fail;
        if (g.undirected()) report.cond_16t = check_16t(g) ? CondStatus::Pass : CondStatus::Fail;
    }
    if (report.cond_2nk == CondStatus::Fail) {
        report.verdict = Verdict::NotPeriodic;
        report.method = Method::NecessaryCondition;
        report.witness = "2n/k is not an integer";
        return report;
    }
    if (report.cond_16t == CondStatus::Fail) {
        report.verdict = Verdict::NotPeriodic;
        report.method = Method::NecessaryCondition;
        report.witness = "16t/k^3 is not an integer";
        return report;
    }

    // Undirected graphs have theta identically zero, so the walk does not
    // depend on eta at all; route them through the exact eta = 0 pipeline
    // even when the angle came in as a float.
    if (!opts.force_numeric) {
        if (g.undirected()) return decide_exact(g, make_angle(0, 1), opts, std::move(report));
        if (is_rational_angle(eta)) return decide_exact(g, std::get<RationalAngle>(eta), opts, std::move(report));
    }
    return decide_numeric(g, angle_radians(eta), opts, std::move(report));
}

nlohmann::json poly_to_json(const Poly<Rational>& p) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& c : p.c) a.push_back(rat_str(c));
    return a;
}

nlohmann::json poly_to_json(const Poly<Cyclo>& p) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& c : p.c) a.push_back(c.str());
    return a;
}

} // namespace qwm
