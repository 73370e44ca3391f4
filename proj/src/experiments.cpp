#include "qwm/experiments.hpp"

#include <chrono>
#include <map>
#include <ostream>
#include <sstream>

#include "qwm/rng.hpp"

namespace qwm {

namespace {

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string alpha_for(const MixedGraph& g) {
    auto k = g.regular_degree();
    if (!k) return "";
    Rational a = Rational(g.vertex_count()) - make_rational(2L * g.vertex_count(), *k);
    return rat_str(a);
}

} // namespace

MixedGraph random_connected_mixed_graph(SplitMix64& rng, int n_min, int n_max) {
    const int n = n_min + static_cast<int>(rng.below(static_cast<std::uint64_t>(n_max - n_min + 1)));
    std::vector<ArcSpec> specs;
    std::vector<std::vector<bool>> present(static_cast<std::size_t>(n),
                                           std::vector<bool>(static_cast<std::size_t>(n), false));
    auto add = [&](int u, int v) {
        int cls = static_cast<int>(rng.below(3));
        if (cls == 0)
            specs.push_back({u, v, LinkClass::Undirected});
        else if (cls == 1)
            specs.push_back({u, v, LinkClass::Forward});
        else
            specs.push_back({v, u, LinkClass::Forward});
        present[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
        present[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
    };
    for (int v = 1; v < n; ++v) add(static_cast<int>(rng.below(static_cast<std::uint64_t>(v))), v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (present[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) continue;
            if (rng.below(3) == 0) add(u, v);
        }
    return MixedGraph::build(n, specs);
}

MixedGraph random_circulant_mixed(SplitMix64& rng, int p, int k) {
    if (k % 2 != 0 || k < 2 || k >= p) fail(Errc::BadParameters, "circulant needs even k with 2 <= k < p");
    const int half = (p - 1) / 2;
    std::vector<int> offsets;
    // choose k/2 distinct offsets from 1..half
    std::vector<int> pool;
    for (int o = 1; o <= half; ++o) pool.push_back(o);
    for (int pick = 0; pick < k / 2; ++pick) {
        std::size_t idx = static_cast<std::size_t>(rng.below(pool.size()));
        offsets.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    std::vector<ArcSpec> specs;
    for (int off : offsets) {
        // each unordered pair {u, u+off} arises exactly once as u sweeps 0..p-1
        for (int u = 0; u < p; ++u) {
            int v = (u + off) % p;
            int cls = static_cast<int>(rng.below(3));
            if (cls == 0)
                specs.push_back({u, v, LinkClass::Undirected});
            else if (cls == 1)
                specs.push_back({u, v, LinkClass::Forward});
            else
                specs.push_back({v, u, LinkClass::Forward});
        }
    }
    return MixedGraph::build(p, specs);
}

bool ExperimentReport::aggregate_consistent() const { return aggregate == aggregate_of(rows); }

std::string aggregate_of(const std::vector<InstanceRow>& rows) {
    std::map<std::string, std::size_t> counts;
    for (const auto& r : rows) counts[verdict_name(r.report.verdict)]++;
    std::ostringstream os;
    if (counts.size() == 1) {
        os << rows.size() << "/" << rows.size() << " " << counts.begin()->first;
    } else {
        bool first = true;
        for (const auto& [name, c] : counts) {
            if (!first) os << ", ";
            first = false;
            os << c << " " << name;
        }
    }
    return os.str();
}

nlohmann::json ExperimentReport::to_json() const {
    nlohmann::json rows_json = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json row = r.report.to_json();
        row["index"] = r.index;
        if (!r.alpha_2nm2.empty()) row["alpha_2n_minus_2"] = r.alpha_2nm2;
        rows_json.push_back(row);
    }
    nlohmann::json j;
    j["schema"] = 1;
    j["experiment"] = id;
    j["aggregate"] = aggregate;
    j["wall_seconds"] = wall_seconds;
    if (!expectation.empty()) {
        j["expectation"] = expectation;
        j["counterexamples"] = counterexamples;
    }
    j["rows"] = rows_json;
    return j;
}

void ExperimentReport::write_csv(std::ostream& os) const {
    os << "index,verdict,tau,alpha_2n_minus_2\n";
    for (const auto& r : rows) {
        os << r.index << "," << verdict_name(r.report.verdict) << ",";
        if (r.report.verdict == Verdict::Periodic) os << r.report.tau;
        os << "," << r.alpha_2nm2 << "\n";
    }
}

MixedGraph complete_from_code(int n, std::uint64_t code) {
    const int pairs = n * (n - 1) / 2;
    std::vector<int> digits(static_cast<std::size_t>(pairs));
    for (int i = 0; i < pairs; ++i) {
        digits[static_cast<std::size_t>(i)] = static_cast<int>(code % 3);
        code /= 3;
    }
    return complete_graph(n, digits);
}

ExperimentReport enumerate_complete(int n, const EtaAngle& eta, const DecideOptions& opts) {
    if (n < 2) fail(Errc::BadParameters, "enumerate-complete needs n >= 2");
    if (n > 5) fail(Errc::NTooLarge, "enumerate-complete is capped at n = 5 (3^10 instances)");
    const auto t0 = std::chrono::steady_clock::now();

    std::uint64_t total = 1;
    for (int i = 0; i < n * (n - 1) / 2; ++i) total *= 3;

    ExperimentReport rep;
    {
        std::ostringstream os;
        os << "enumerate-complete n=" << n;
        rep.id = os.str();
    }
    rep.rows.resize(total);

#pragma omp parallel for schedule(dynamic, 64)
    for (long long code = 0; code < static_cast<long long>(total); ++code) {
        MixedGraph g = complete_from_code(n, static_cast<std::uint64_t>(code));
        InstanceRow row;
        row.index = static_cast<std::uint64_t>(code);
        row.report = decide_periodicity(g, eta, opts);
        row.alpha_2nm2 = alpha_for(g);
        rep.rows[static_cast<std::size_t>(code)] = std::move(row);
    }

    // Theorem gates: complete graphs on n >= 4 vertices are never periodic;
    // mixed paths (n = 2) always are; mixed cycles (n = 3) are periodic for
    // rational angles and only the orientation-balanced ones otherwise.
    if (n >= 4)
        rep.expectation = "all NotPeriodic";
    else if (n == 2 || is_rational_angle(eta))
        rep.expectation = "all Periodic";
    else
        rep.expectation = "no Periodic";
    for (const auto& r : rep.rows) {
        const Verdict v = r.report.verdict;
        const bool bad = (rep.expectation == "all NotPeriodic" && v != Verdict::NotPeriodic) ||
                         (rep.expectation == "all Periodic" && v != Verdict::Periodic) ||
                         (rep.expectation == "no Periodic" && v == Verdict::Periodic);
        if (bad) rep.counterexamples.push_back(r.index);
    }

    rep.aggregate = aggregate_of(rep.rows);
    rep.wall_seconds = seconds_since(t0);
    return rep;
}

Family family_from_name(const std::string& name) {
    if (name == "cycle") return Family::Cycle;
    if (name == "complete-bipartite") return Family::CompleteBipartite;
    if (name == "multipartite") return Family::Multipartite;
    if (name == "hamming") return Family::Hamming;
    fail(Errc::BadParameters, "unknown family: " + name);
}

ExperimentReport verify_known_family(Family fam, const std::vector<int>& params, const DecideOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    MixedGraph g = [&]() {
        switch (fam) {
            case Family::Cycle:
                if (params.size() != 1) fail(Errc::BadParameters, "cycle takes one parameter n");
                return cycle_graph(params[0]);
            case Family::CompleteBipartite:
                if (params.size() != 2) fail(Errc::BadParameters, "complete-bipartite takes a and b");
                return complete_bipartite(params[0], params[1]);
            case Family::Multipartite:
                if (params.size() != 1) fail(Errc::BadParameters, "multipartite takes lambda");
                return complete_tripartite(params[0]);
            case Family::Hamming:
                if (params.size() != 2) fail(Errc::BadParameters, "hamming takes d and q");
                return hamming_graph(params[0], params[1]);
        }
        fail(Errc::BadParameters, "unknown family");
    }();
    if (2 * g.edge_count() > 400) fail(Errc::BadParameters, "family instance too large (2m > 400)");

    DecideOptions o = opts;
    o.verify_minimality = true;

    ExperimentReport rep;
    rep.id = "verify-known";
    InstanceRow row;
    row.index = 0;
    row.report = decide_periodicity(g, EtaAngle(make_angle(0, 1)), o);
    row.alpha_2nm2 = alpha_for(g);
    rep.rows.push_back(std::move(row));

    rep.expectation = "Periodic with both conditions passing";
    const auto& r = rep.rows[0].report;
    if (r.verdict != Verdict::Periodic || r.cond_2nk != CondStatus::Pass || r.cond_16t != CondStatus::Pass)
        rep.counterexamples.push_back(0);

    rep.aggregate = aggregate_of(rep.rows);
    rep.wall_seconds = seconds_since(t0);
    return rep;
}

ExperimentReport prime_scan(int p, const RationalAngle& eta, int samples, std::uint64_t seed,
                            const DecideOptions& opts) {
    if (p < 3 || p > 13) fail(Errc::BadParameters, "prime-scan supports 3 <= p <= 13");
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) fail(Errc::NotPrime, "p must be prime");
    const auto t0 = std::chrono::steady_clock::now();

    ExperimentReport rep;
    {
        std::ostringstream os;
        os << "prime-scan p=" << p;
        rep.id = os.str();
    }

    // Half one: mixed cycles, exhaustive up to p = 7.
    std::uint64_t cycle_count = 1;
    if (p <= 7) {
        for (int i = 0; i < p; ++i) cycle_count *= 3;
    } else {
        cycle_count = static_cast<std::uint64_t>(samples);
    }
    std::vector<InstanceRow> cycle_rows(cycle_count);

#pragma omp parallel for schedule(dynamic, 16)
    for (long long idx = 0; idx < static_cast<long long>(cycle_count); ++idx) {
        std::uint64_t code;
        if (p <= 7) {
            code = static_cast<std::uint64_t>(idx);
        } else {
            SplitMix64 rng(seed + static_cast<std::uint64_t>(idx));
            std::uint64_t span = 1;
            for (int i = 0; i < p; ++i) span *= 3;
            code = rng.below(span);
        }
        std::vector<int> digits(static_cast<std::size_t>(p));
        std::uint64_t c = code;
        for (int i = 0; i < p; ++i) {
            digits[static_cast<std::size_t>(i)] = static_cast<int>(c % 3);
            c /= 3;
        }
        InstanceRow row;
        row.index = code;
        MixedGraph g = cycle_graph(p, digits);
        row.report = decide_periodicity(g, EtaAngle(eta), opts);
        row.alpha_2nm2 = alpha_for(g);
        cycle_rows[static_cast<std::size_t>(idx)] = std::move(row);
    }

    // Half two: random regular circulants with k not in {1, 2}; 2p/k cannot
    // be an integer for even 4 <= k < p, so every one must fail the
    // condition.
    std::vector<InstanceRow> reg_rows;
    std::vector<int> valid_k;
    for (int k = 4; k < p; k += 2) valid_k.push_back(k);
    if (!valid_k.empty() && samples > 0) {
        reg_rows.resize(static_cast<std::size_t>(samples));
        SplitMix64 rng(seed ^ 0xabcdef12345678ULL);
        for (int s = 0; s < samples; ++s) {
            int k = valid_k[static_cast<std::size_t>(rng.below(valid_k.size()))];
            MixedGraph g = random_circulant_mixed(rng, p, k);
            InstanceRow row;
            row.index = static_cast<std::uint64_t>(cycle_count) + static_cast<std::uint64_t>(s);
            row.report = decide_periodicity(g, EtaAngle(eta), opts);
            row.alpha_2nm2 = alpha_for(g);
            reg_rows[static_cast<std::size_t>(s)] = std::move(row);
        }
    }

    rep.expectation = "cycles Periodic; other regular graphs fail 2n/k";
    for (std::size_t i = 0; i < cycle_rows.size(); ++i)
        if (cycle_rows[i].report.verdict != Verdict::Periodic) rep.counterexamples.push_back(cycle_rows[i].index);
    for (const auto& r : reg_rows)
        if (r.report.cond_2nk != CondStatus::Fail) rep.counterexamples.push_back(r.index);

    rep.rows = std::move(cycle_rows);
    rep.rows.insert(rep.rows.end(), reg_rows.begin(), reg_rows.end());
    rep.aggregate = aggregate_of(rep.rows);
    rep.wall_seconds = seconds_since(t0);
    return rep;
}

} // namespace qwm
