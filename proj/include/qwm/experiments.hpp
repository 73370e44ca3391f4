#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "qwm/periodicity.hpp"

namespace qwm {

struct InstanceRow {
    std::uint64_t index = 0;
    PeriodicityReport report;
    std::string alpha_2nm2; // exact alpha_{2n-2} when the instance is regular
};

struct ExperimentReport {
    std::string id;
    std::vector<InstanceRow> rows;
    std::string aggregate;
    double wall_seconds = 0.0;
    /// Instances that contradict the experiment's expectation, when one
    /// applies (theorem checking); empty otherwise.
    std::vector<std::uint64_t> counterexamples;
    std::string expectation;

    /// Recompute the aggregate line from the rows and compare.
    bool aggregate_consistent() const;

    nlohmann::json to_json() const;
    void write_csv(std::ostream& os) const;
};

std::string aggregate_of(const std::vector<InstanceRow>& rows);

/// Decode one orientation assignment of K_n: base-3 digits over the pairs
/// (0,1),(0,2),...,(1,2),... in lexicographic order; 0 = bidirected,
/// 1 = u->v, 2 = v->u.
MixedGraph complete_from_code(int n, std::uint64_t code);

/// Decide every one of the 3^(n(n-1)/2) orientation assignments of K_n.
/// n <= 5. Instances run in parallel; rows are merged by index.
ExperimentReport enumerate_complete(int n, const EtaAngle& eta, const DecideOptions& opts = {});

enum class Family { Cycle, CompleteBipartite, Multipartite, Hamming };

Family family_from_name(const std::string& name);

/// Confirm a known periodic family member: verdict must be Periodic with an
/// exactly verified minimal tau, and both divisibility conditions must pass.
ExperimentReport verify_known_family(Family fam, const std::vector<int>& params,
                                     const DecideOptions& opts = {});

/// Mixed cycles on a prime number of vertices are periodic for rational
/// angles; regular non-cycle graphs on p vertices must fail 2n/k. Checks
/// both halves: all 3^p cycle orientations (sampled above p = 7) plus
/// `samples` random regular circulants with k not in {1, 2}.
ExperimentReport prime_scan(int p, const RationalAngle& eta, int samples, std::uint64_t seed = 1,
                            const DecideOptions& opts = {});

} // namespace qwm
