#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sg/checks.hpp"
#include "sg/cliques.hpp"
#include "sg/core.hpp"
#include "sg/hoffman.hpp"
#include "sg/json_io.hpp"
#include "sg/lattice.hpp"
#include "sg/spectra.hpp"
#include "sg/structure.hpp"

using nlohmann::json;

namespace {

constexpr const char* kSchemaVersion = "1";
constexpr std::uint64_t kDefaultSeed = 20240901;

// Report numbers carry 12 significant digits.
double sig12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::atof(buf);
}

json spectrum_to_json(const std::vector<double>& eigenvalues) {
    json arr = json::array();
    for (double v : eigenvalues) arr.push_back(sig12(v));
    return arr;
}

json vertex_set_to_json(const sg::VertexSet& vs) {
    json arr = json::array();
    for (int v : vs) arr.push_back(v);
    return arr;
}

json envelope(const std::string& command, const std::string& input_path, json parameters) {
    json report;
    report["schema_version"] = kSchemaVersion;
    report["command"] = command;
    if (!input_path.empty())
        report["input"] = {{"path", input_path}, {"digest", sg::file_digest(input_path)}};
    report["parameters"] = std::move(parameters);
    report["warnings"] = json::array();
    return report;
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

int run_spectrum(const std::string& path) {
    json raw = sg::load_json_file(path);
    json report = envelope("spectrum", path, json::object());
    if (sg::looks_like_hoffman(raw)) {
        sg::HoffmanSignedGraph h = sg::hoffman_from_json(raw);
        sg::Spectrum sp = sg::hoffman_eigenvalues(h);
        report["results"] = {{"type", "hoffman_special_matrix"},
                             {"special_matrix", sg::int_matrix_to_json(sg::special_matrix(h))},
                             {"eigenvalues", spectrum_to_json(sp.eigenvalues)},
                             {"lambda_min", sig12(sp.eigenvalues.front())}};
    } else {
        sg::SignedGraph g = sg::graph_from_json(raw);
        sg::Spectrum sp = sg::eigenvalues(sg::adjacency_matrix(g));
        report["results"] = {{"type", "adjacency"},
                             {"eigenvalues", spectrum_to_json(sp.eigenvalues)},
                             {"lambda_min", sig12(sp.eigenvalues.front())}};
    }
    emit(report);
    return 0;
}

int run_cliques(const std::string& path, int n_min, std::optional<int> m) {
    sg::SignedGraph g = sg::graph_from_json(sg::load_json_file(path));
    json params{{"n_min", n_min}};
    if (m) params["m"] = *m;
    json report = envelope("cliques", path, params);
    sg::CliqueCatalog cat = sg::maximal_positive_cliques(g, n_min);
    json cliques = json::array();
    for (const sg::PositiveClique& c : cat.cliques) {
        json entry{{"vertices", vertex_set_to_json(c.vertices)}};
        if (m) {
            sg::NeighborhoodSplit split = sg::m_neighborhoods(g, c, *m);
            entry["split"] = {{"plus", vertex_set_to_json(split.plus)},
                              {"minus", vertex_set_to_json(split.minus)},
                              {"rest", vertex_set_to_json(split.rest)},
                              {"disjoint", split.disjoint()}};
        }
        cliques.push_back(std::move(entry));
    }
    report["results"] = {{"clique_count", cat.cliques.size()}, {"cliques", std::move(cliques)}};
    emit(report);
    return 0;
}

int run_decompose(const std::string& path, int m, int n, std::optional<double> lambda,
                  const std::string& kappa_path, bool force) {
    sg::SignedGraph g = sg::graph_from_json(sg::load_json_file(path));
    sg::DecompositionParams params;
    params.m = m;
    params.n = n;
    params.lambda = lambda;
    json jparams{{"m", m}, {"n", n}, {"force", force}};
    if (lambda) jparams["lambda"] = *lambda;
    if (!kappa_path.empty()) {
        params.kappa_inputs = sg::kappa_from_json(sg::load_json_file(kappa_path));
        jparams["kappa_file"] = kappa_path;
    }
    json report = envelope("decompose", path, jparams);

    sg::Decomposition d = sg::decompose(g, params, force);
    for (const std::string& w : d.warnings) report["warnings"].push_back(w);
    sg::DecompositionReport dr = sg::verify_decomposition(g, d);

    json pieces = json::array();
    for (const sg::DecompositionPiece& p : d.pieces)
        pieces.push_back({{"vertices", vertex_set_to_json(p.vertices)},
                          {"plus", vertex_set_to_json(p.plus)},
                          {"minus", vertex_set_to_json(p.minus)},
                          {"clique", vertex_set_to_json(p.clique)}});
    json bounds = json::array();
    for (const sg::BoundCheck& b : dr.bounds_checked)
        bounds.push_back({{"name", b.name},
                          {"bound", b.bound},
                          {"value", b.value},
                          {"satisfied", b.satisfied}});
    report["results"] = {
        {"piece_count", d.pieces.size()},
        {"pieces", std::move(pieces)},
        {"residual", sg::graph_to_json(d.residual)},
        {"report",
         {{"max_membership", dr.max_membership},
          {"min_membership", dr.min_membership},
          {"plex_degrees", dr.plex_degrees},
          {"max_pairwise_intersection", dr.max_pairwise_intersection},
          {"residual_max_valency", dr.residual_max_valency},
          {"uncovered_vertices", vertex_set_to_json(dr.uncovered_vertices)},
          {"integrity_issues", dr.integrity_issues},
          {"bounds_checked", std::move(bounds)}}}};
    emit(report);
    for (const sg::BoundCheck& b : dr.bounds_checked)
        if (!b.satisfied) {
            std::cerr << "bound violated: " << b.name << "\n";
            return 1;
        }
    if (!dr.integrity_issues.empty()) return 1;
    return 0;
}

int run_integrable(const std::string& path, long long s, int max_dim, std::uint64_t budget,
                   const std::string& out_path) {
    sg::SignedGraph g = sg::graph_from_json(sg::load_json_file(path));
    json report = envelope("integrable", path,
                           json{{"s", s}, {"max_dim", max_dim}, {"budget", budget}});
    sg::IntegrabilitySearchResult res = sg::integrability_search(g, s, max_dim, budget);
    report["results"]["nodes_used"] = res.nodes_used;
    report["results"]["max_dim"] = res.max_dim;
    switch (res.status) {
        case sg::SearchStatus::found: {
            report["results"]["status"] = "found";
            report["results"]["certificate"] = sg::certificate_to_json(*res.certificate);
            report["results"]["verified"] = sg::verify_certificate(*res.certificate, g);
            if (!out_path.empty()) {
                std::ofstream out(out_path);
                out << sg::certificate_to_json(*res.certificate).dump(2) << "\n";
            }
            break;
        }
        case sg::SearchStatus::undecided:
            report["results"]["status"] = "undecided within budget";
            break;
        case sg::SearchStatus::impossible:
            report["results"]["status"] =
                "impossible at max_dim " + std::to_string(res.max_dim);
            break;
    }
    emit(report);
    return 0;
}

int run_verify_cert(const std::string& graph_path, const std::string& cert_path) {
    sg::SignedGraph g = sg::graph_from_json(sg::load_json_file(graph_path));
    sg::IntegrabilityCertificate cert =
        sg::certificate_from_json(sg::load_json_file(cert_path));
    json report = envelope("verify-cert", graph_path, json{{"certificate", cert_path}});
    bool ok = sg::verify_certificate(cert, g);
    report["results"] = {{"verified", ok}, {"s", cert.s}, {"shift", cert.shift}};
    emit(report);
    return ok ? 0 : 1;
}

int run_checks(const std::string& suite, std::uint64_t seed) {
    sg::checks::SuiteResult result = sg::checks::run_suite(suite, seed);
    json report = envelope("checks", "", json{{"suite", suite}, {"seed", seed}});
    json cases = json::array();
    int failures = 0;
    for (const sg::checks::CheckCase& c : result.cases) {
        json entry{{"name", c.name}, {"passed", c.passed}};
        if (!c.detail.empty()) entry["detail"] = c.detail;
        if (!c.replay.empty()) entry["replay"] = json::parse(c.replay);
        if (!c.passed) failures++;
        cases.push_back(std::move(entry));
    }
    report["results"] = {{"total", result.cases.size()},
                         {"failures", failures},
                         {"cases", std::move(cases)}};
    emit(report);
    std::cerr << "suite " << suite << ": " << (result.cases.size() - failures) << "/"
              << result.cases.size() << " checks passed (seed " << seed << ")\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"signed-graph spectra, cliques, Hoffman graphs and integrability"};
    app.require_subcommand(1);

    std::string graph_path, cert_path, kappa_path, out_path, suite;
    int n_min = 1, m_flag = 2, n_flag = 1, max_dim = 0;
    long long s_flag = 1;
    std::optional<double> lambda;
    double lambda_value = 0.0;
    bool force = false;
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t budget = 10'000'000;
    std::optional<int> cliques_m;
    int cliques_m_value = 0;

    CLI::App* spectrum = app.add_subcommand("spectrum", "eigenvalues of a (Hoffman) signed graph");
    spectrum->add_option("graph", graph_path, "graph JSON file")->required();

    CLI::App* cliques = app.add_subcommand("cliques", "maximal positive cliques and neighborhoods");
    cliques->add_option("graph", graph_path, "graph JSON file")->required();
    cliques->add_option("--n-min", n_min, "minimum clique size")->required();
    CLI::Option* mopt = cliques->add_option("--m", cliques_m_value, "emit m-neighborhood splits");

    CLI::App* decompose = app.add_subcommand("decompose", "clique-neighborhood decomposition");
    decompose->add_option("graph", graph_path, "graph JSON file")->required();
    decompose->add_option("--m", m_flag, "neighborhood multiplicity")->required();
    decompose->add_option("--n", n_flag, "minimum clique size")->required();
    CLI::Option* lopt = decompose->add_option("--lambda", lambda_value,
                                              "eigenvalue bound for report checks (<= -1)");
    decompose->add_option("--kappa-file", kappa_path, "kappa/Ramsey config JSON");
    decompose->add_flag("--force", force, "skip the switching-free precondition check");

    CLI::App* integrable = app.add_subcommand("integrable", "search an s-integrability certificate");
    integrable->add_option("graph", graph_path, "graph JSON file")->required();
    integrable->add_option("--s", s_flag, "integrability parameter")->required();
    integrable->add_option("--max-dim", max_dim, "row cap for N (default 2|V|)");
    integrable->add_option("--budget", budget, "search node budget");
    integrable->add_option("--out", out_path, "write the certificate JSON here");

    CLI::App* verify = app.add_subcommand("verify-cert", "re-check a certificate exactly");
    verify->add_option("graph", graph_path, "graph JSON file")->required();
    verify->add_option("certificate", cert_path, "certificate JSON file")->required();

    CLI::App* checks = app.add_subcommand("checks", "run a named property suite");
    checks->add_option("suite", suite, "switching|interlacing|hoffman|trichotomy|catalog|convergence")
        ->required();
    checks->add_option("--seed", seed, "64-bit suite seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (spectrum->parsed()) return run_spectrum(graph_path);
        if (cliques->parsed()) {
            if (mopt->count()) cliques_m = cliques_m_value;
            return run_cliques(graph_path, n_min, cliques_m);
        }
        if (decompose->parsed()) {
            if (lopt->count()) lambda = lambda_value;
            return run_decompose(graph_path, m_flag, n_flag, lambda, kappa_path, force);
        }
        if (integrable->parsed())
            return run_integrable(graph_path, s_flag, max_dim, budget, out_path);
        if (verify->parsed()) return run_verify_cert(graph_path, cert_path);
        if (checks->parsed()) return run_checks(suite, seed);
    } catch (const sg::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
