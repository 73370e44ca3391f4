#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qwm/charpoly.hpp"
#include "qwm/cyclotomic.hpp"
#include "qwm/graph.hpp"

namespace qwm {

/// 2n/k must be an integer for a regular periodic graph. A failure is a
/// certificate of non-periodicity.
bool check_2nk(const MixedGraph& g);

/// 16t/k^3 must be an integer for an undirected regular periodic graph.
bool check_16t(const MixedGraph& g);

struct Fraction {
    long num = 0;
    long den = 1;
};

/// Match a numeric eigenvalue to a root of unity e^(2 pi i p/q), q <= q_max,
/// via continued-fraction convergents of arg(lambda)/2pi. Returns the reduced
/// p/q, or nothing when |lambda| is off the unit circle or no convergent
/// lands within tol.
std::optional<Fraction> rationalize_root(cplx lambda, long q_max = 10000, double tol = 1e-9);

struct CycloFactorization {
    // (d, multiplicity) with the polynomial equal to prod Phi_d^multiplicity.
    std::vector<std::pair<unsigned, unsigned>> factors;
};

/// Factor a monic integer polynomial into cyclotomics by trial division.
/// Returns nothing if a non-cyclotomic factor remains, i.e. some root is not
/// a root of unity.
std::optional<CycloFactorization> is_cyclotomic_product(const Poly<Rational>& p);

/// Do all coefficients lie in Z[zeta]? A failed coefficient certifies
/// non-periodicity.
bool algebraic_integer_coefficients(const Poly<Cyclo>& psi);

/// Product of the Galois conjugates of p over Q: sigma ranges over
/// zeta -> zeta^j, gcd(j, conductor) = 1. The result has rational
/// coefficients; orders of roots are preserved by every embedding, so the
/// norm factors into cyclotomics exactly when p's roots are all roots of
/// unity.
Poly<Rational> galois_norm(const Poly<Cyclo>& p);

enum class Verdict { Periodic, NotPeriodic, UndecidedNumeric };
enum class Method { CyclotomicFactorization, ExactPowerCheck, NumericRationalization, NecessaryCondition };
enum class CondStatus { Pass, Fail, NotApplicable };

const char* verdict_name(Verdict v);
const char* method_name(Method m);
const char* cond_name(CondStatus c);

struct EigenOrderEntry {
    bool is_root_of_unity = false;
    unsigned long long order = 0; // meaningful when is_root_of_unity
    unsigned count = 0;
};

struct PeriodicityReport {
    Verdict verdict = Verdict::UndecidedNumeric;
    unsigned long long tau = 0; // period when verdict == Periodic
    Method method = Method::NumericRationalization;
    CondStatus cond_2nk = CondStatus::NotApplicable;
    CondStatus cond_16t = CondStatus::NotApplicable;
    std::string witness; // names the failed condition / certificate
    std::vector<EigenOrderEntry> eigen_summary;

    nlohmann::json to_json() const;
    std::string summary() const;
};

struct DecideOptions {
    unsigned long long tau_max = 1'000'000;
    long q_max = 10'000;
    double unit_tol = 1e-9;
    double rationalize_tol = 1e-9;
    double power_tol = 1e-8;
    /// Re-verify minimality by exact powers over the prime divisors of tau.
    bool verify_minimality = false;
    /// Test hook: route rational angles through the numeric pipeline.
    bool force_numeric = false;
};

/// Full decision pipeline: necessary conditions, then the exact cyclotomic
/// route for rational angles (undirected graphs are eta-independent and use
/// eta = 0), then the numeric route for float angles.
PeriodicityReport decide_periodicity(const MixedGraph& g, const EtaAngle& eta, const DecideOptions& opts = {});

nlohmann::json poly_to_json(const Poly<Rational>& p);
nlohmann::json poly_to_json(const Poly<Cyclo>& p);

} // namespace qwm
