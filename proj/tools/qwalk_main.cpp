// qwalk: periodicity analysis of discrete-time quantum walks on mixed graphs.
//
// Exit codes: 0 = results consistent with the expected outcome (or no
// expectation applies), 1 = counterexample found, 2 = input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qwm/charpoly.hpp"
#include "qwm/experiments.hpp"
#include "qwm/periodicity.hpp"
#include "qwm/walk.hpp"

namespace {

using namespace qwm;

struct AngleOpts {
    std::string eta_frac;
    std::optional<double> eta_float;
};

void add_angle_options(CLI::App* cmd, AngleOpts& a) {
    auto* frac = cmd->add_option("--eta", a.eta_frac,
                                 "rational angle as A/B, meaning eta = 2*pi*A/B (e.g. 1/4 for pi/2)");
    auto* flt = cmd->add_option("--eta-float", a.eta_float, "float angle in radians (numeric pipeline)");
    frac->excludes(flt);
}

EtaAngle parse_angle(const AngleOpts& a) {
    if (a.eta_float) return EtaAngle(*a.eta_float);
    if (a.eta_frac.empty()) return EtaAngle(make_angle(0, 1));
    const auto slash = a.eta_frac.find('/');
    try {
        if (slash == std::string::npos) return EtaAngle(make_angle(std::stol(a.eta_frac), 1));
        return EtaAngle(make_angle(std::stol(a.eta_frac.substr(0, slash)),
                                   std::stol(a.eta_frac.substr(slash + 1))));
    } catch (const std::exception&) {
        fail(Errc::ParseError, "--eta expects A/B with integer A, B");
    }
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) fail(Errc::ParseError, "cannot write " + path);
    out << j.dump(2) << "\n";
}

int run_analyze(const std::string& graph_file, const AngleOpts& angle, unsigned long long tau_max,
                const std::string& json_out) {
    MixedGraph g = MixedGraph::load(graph_file);
    EtaAngle eta = parse_angle(angle);
    DecideOptions opts;
    opts.tau_max = tau_max;
    opts.verify_minimality = true;

    PeriodicityReport rep = decide_periodicity(g, eta, opts);
    std::cout << "graph: n=" << g.vertex_count() << " m=" << g.edge_count()
              << (g.undirected() ? " (undirected)" : " (mixed)") << "\n";
    std::cout << "periodicity: " << rep.summary() << "\n";

    nlohmann::json out;
    out["periodicity"] = rep.to_json();
    if (is_rational_angle(eta) || g.undirected()) {
        RationalAngle ra = g.undirected() ? make_angle(0, 1) : std::get<RationalAngle>(eta);
        Poly<Cyclo> gp = normalized_charpoly_exact(g, ra);
        out["g"] = poly_to_json(gp);
        out["psi"] = poly_to_json(inherited_factor(gp, g.vertex_count()));
        auto checks = coefficient_identities(g, ra);
        nlohmann::json jc = nlohmann::json::array();
        std::cout << "coefficient identities:\n";
        for (const auto& c : checks) {
            std::cout << "  " << c.name << ": "
                      << (!c.applicable ? "n/a" : (c.pass ? "pass" : "FAIL"));
            if (c.applicable && !c.pass) std::cout << "  (" << c.lhs << " vs " << c.rhs << ")";
            std::cout << "\n";
            jc.push_back({{"name", c.name},
                          {"applicable", c.applicable},
                          {"pass", c.pass},
                          {"lhs", c.lhs},
                          {"rhs", c.rhs}});
        }
        out["identities"] = jc;
        if (!all_pass(checks)) {
            std::cout << "counterexample: a coefficient identity failed\n";
            if (!json_out.empty()) write_json_file(json_out, out);
            return 1;
        }
    } else {
        std::cout << "coefficient identities: skipped (float angle on a mixed graph)\n";
    }
    if (!json_out.empty()) write_json_file(json_out, out);
    return 0;
}

int finish_experiment(const ExperimentReport& rep, const std::string& json_out, const std::string& csv_out) {
    std::cout << rep.id << ": " << rep.aggregate << "  (" << rep.rows.size() << " instances, "
              << rep.wall_seconds << " s)\n";
    if (!rep.expectation.empty()) std::cout << "expectation: " << rep.expectation << "\n";
    if (!json_out.empty()) write_json_file(json_out, rep.to_json());
    if (!csv_out.empty()) {
        std::ofstream out(csv_out);
        if (!out) fail(Errc::ParseError, "cannot write " + csv_out);
        rep.write_csv(out);
    }
    if (!rep.counterexamples.empty()) {
        std::cout << "counterexamples (" << rep.counterexamples.size() << "):";
        std::size_t shown = 0;
        for (std::uint64_t idx : rep.counterexamples) {
            if (shown++ == 10) {
                std::cout << " ...";
                break;
            }
            std::cout << " " << idx;
        }
        std::cout << "\n";
        for (const auto& row : rep.rows)
            if (row.index == rep.counterexamples[0]) {
                std::cout << "first counterexample: instance " << row.index << " -> "
                          << row.report.summary() << "\n";
                break;
            }
        return 1;
    }
    return 0;
}

int run_dump(const std::string& graph_file, const std::string& which, const AngleOpts& angle,
             const std::string& mode, const std::string& out_path) {
    MixedGraph g = MixedGraph::load(graph_file);
    ArcOrdering arcs(g);
    EtaAngle eta = parse_angle(angle);

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) fail(Errc::ParseError, "cannot write " + out_path);
        os = &file;
    }

    if (mode == "exact") {
        if (!is_rational_angle(eta)) fail(Errc::NumericAngle, "exact dump needs a rational angle");
        RationalAngle ra = std::get<RationalAngle>(eta);
        Matrix<Cyclo> m;
        if (which == "H") m = hermitian_adjacency_exact(g, ra);
        else if (which == "Htilde") m = normalized_hermitian_exact(g, ra);
        else if (which == "D") m = degree_matrix_exact(g);
        else if (which == "C") m = coin_exact(g, arcs);
        else if (which == "S") m = shift_exact(g, arcs, ra);
        else if (which == "U") m = time_evolution_exact(g, arcs, ra);
        else if (which == "K") fail(Errc::BadParameters, "K has irrational entries; use --mode numeric");
        else fail(Errc::BadParameters, "unknown matrix: " + which);
        dump_matrix_csv(*os, m);
    } else if (mode == "numeric") {
        const double rad = angle_radians(eta);
        Matrix<cplx> m;
        if (which == "H") m = hermitian_adjacency_numeric(g, rad);
        else if (which == "Htilde") m = normalized_hermitian_numeric(g, rad);
        else if (which == "D") m = degree_matrix_numeric(g);
        else if (which == "K") m = boundary_numeric(g, arcs);
        else if (which == "C") m = coin_numeric(g, arcs);
        else if (which == "S") m = shift_numeric(g, arcs, rad);
        else if (which == "U") m = time_evolution_numeric(g, arcs, rad);
        else fail(Errc::BadParameters, "unknown matrix: " + which);
        dump_matrix_csv(*os, m);
    } else {
        fail(Errc::BadParameters, "mode must be exact or numeric");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum-walk periodicity toolkit for mixed graphs"};
    app.require_subcommand(1);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "decide periodicity of one graph and report identities");
    std::string graph_file, json_out;
    AngleOpts analyze_angle;
    unsigned long long tau_max = 1'000'000;
    analyze->add_option("--graph", graph_file, "graph JSON file")->required();
    add_angle_options(analyze, analyze_angle);
    analyze->add_option("--tau-max", tau_max, "largest period candidate to verify");
    analyze->add_option("--json", json_out, "write the full report as JSON");

    // enumerate-complete
    auto* enumc = app.add_subcommand("enumerate-complete",
                                     "decide every orientation assignment of K_n (n <= 5)");
    int enum_n = 4;
    AngleOpts enum_angle;
    std::string enum_json, enum_csv;
    unsigned long long enum_tau_max = 1'000'000;
    enumc->add_option("--n", enum_n, "number of vertices (2..5)")->required();
    add_angle_options(enumc, enum_angle);
    enumc->add_option("--tau-max", enum_tau_max, "largest period candidate to verify");
    enumc->add_option("--json", enum_json, "write the experiment report as JSON");
    enumc->add_option("--csv", enum_csv, "write per-instance rows as CSV");

    // verify-known
    auto* verify = app.add_subcommand("verify-known", "confirm a known periodic family member");
    std::string family;
    std::vector<int> params;
    std::string verify_json;
    verify->add_option("--family", family, "cycle | complete-bipartite | multipartite | hamming")->required();
    verify->add_option("--params", params, "family parameters (cycle: n; bipartite: a b; multipartite: lambda; hamming: d q)")
        ->required();
    verify->add_option("--json", verify_json, "write the experiment report as JSON");

    // prime-scan
    auto* prime = app.add_subcommand("prime-scan", "prime vertex count: cycles periodic, others fail 2n/k");
    int prime_p = 5, prime_samples = 10;
    AngleOpts prime_angle;
    std::uint64_t prime_seed = 1;
    std::string prime_json;
    prime->add_option("--p", prime_p, "prime number of vertices (3..13)")->required();
    add_angle_options(prime, prime_angle);
    prime->add_option("--samples", prime_samples, "random regular samples (and cycle samples above p=7)");
    prime->add_option("--seed", prime_seed, "seed for the sampled graphs");
    prime->add_option("--json", prime_json, "write the experiment report as JSON");

    // dump
    auto* dump = app.add_subcommand("dump", "print a walk matrix as CSV");
    std::string dump_graph, dump_matrix = "U", dump_mode = "exact", dump_out;
    AngleOpts dump_angle;
    dump->add_option("--graph", dump_graph, "graph JSON file")->required();
    dump->add_option("--matrix", dump_matrix, "H | Htilde | D | K | C | S | U");
    dump->add_option("--mode", dump_mode, "exact | numeric");
    add_angle_options(dump, dump_angle);
    dump->add_option("--out", dump_out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return run_analyze(graph_file, analyze_angle, tau_max, json_out);
        if (enumc->parsed()) {
            DecideOptions opts;
            opts.tau_max = enum_tau_max;
            return finish_experiment(enumerate_complete(enum_n, parse_angle(enum_angle), opts), enum_json,
                                     enum_csv);
        }
        if (verify->parsed())
            return finish_experiment(verify_known_family(family_from_name(family), params), verify_json, "");
        if (prime->parsed()) {
            EtaAngle eta = parse_angle(prime_angle);
            if (!is_rational_angle(eta)) fail(Errc::BadParameters, "prime-scan needs a rational --eta");
            return finish_experiment(
                prime_scan(prime_p, std::get<RationalAngle>(eta), prime_samples, prime_seed), prime_json, "");
        }
        if (dump->parsed()) return run_dump(dump_graph, dump_matrix, dump_angle, dump_mode, dump_out);
    } catch (const qwm::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
