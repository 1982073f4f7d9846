#include "sg/checks.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "sg/cliques.hpp"
#include "sg/json_io.hpp"
#include "sg/lattice.hpp"
#include "sg/spectra.hpp"
#include "sg/structure.hpp"

namespace sg::checks {

namespace {

std::string fmt(double v) {
    std::ostringstream out;
    out.precision(12);
    out << v;
    return out.str();
}

CheckCase make_case(std::string name, bool passed, std::string detail = "",
                    std::string replay = "") {
    CheckCase c;
    c.name = std::move(name);
    c.passed = passed;
    c.detail = std::move(detail);
    c.replay = std::move(replay);
    return c;
}

bool spectra_close(const std::vector<double>& a, const std::vector<double>& b, double tol) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) return false;
    return true;
}

}  // namespace

SignedGraph random_signed_graph(std::mt19937_64& rng, int n, double edge_prob, double neg_prob) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<SignedEdge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < edge_prob)
                edges.push_back({u, v, coin(rng) < neg_prob ? Sign::minus : Sign::plus});
    return SignedGraph::build(n, edges);
}

SignedGraph random_connected_signed_graph(std::mt19937_64& rng, int n, double extra_prob,
                                          double neg_prob) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<SignedEdge> edges;
    std::vector<std::vector<char>> present(n, std::vector<char>(n, 0));
    for (int v = 1; v < n; ++v) {
        int parent = static_cast<int>(rng() % v);
        edges.push_back({parent, v, coin(rng) < neg_prob ? Sign::minus : Sign::plus});
        present[parent][v] = present[v][parent] = 1;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!present[u][v] && coin(rng) < extra_prob)
                edges.push_back({u, v, coin(rng) < neg_prob ? Sign::minus : Sign::plus});
    return SignedGraph::build(n, edges);
}

VertexSet random_subset(std::mt19937_64& rng, int n) {
    VertexSet out;
    for (int v = 0; v < n; ++v)
        if (rng() & 1) out.push_back(v);
    return out;
}

HoffmanSignedGraph random_hoffman_graph(std::mt19937_64& rng, int max_slim, int max_fat) {
    std::uniform_int_distribution<int> slim_dist(1, max_slim);
    std::uniform_int_distribution<int> fat_dist(0, max_fat);
    int ns = slim_dist(rng);
    int nf = fat_dist(rng);
    SignedGraph slim = random_signed_graph(rng, ns, 0.5, 0.4);
    std::vector<SignedEdge> edges = slim.edges();
    std::vector<int> order(ns);
    for (int v = 0; v < ns; ++v) order[v] = v;
    for (int f = 0; f < nf; ++f) {
        int attach = 1 + static_cast<int>(rng() % ns);
        std::shuffle(order.begin(), order.end(), rng);
        for (int i = 0; i < attach; ++i)
            edges.push_back({order[i], ns + f, (rng() & 1) ? Sign::plus : Sign::minus});
    }
    std::vector<VertexLabel> labels(ns, VertexLabel::slim);
    labels.insert(labels.end(), nf, VertexLabel::fat);
    return HoffmanSignedGraph::build(SignedGraph::build(ns + nf, edges), labels);
}

std::vector<HoffmanSignedGraph> convergence_battery() {
    auto make = [](int slim_count, const std::vector<std::tuple<int, int, Sign>>& slim_edges,
                   const std::vector<std::vector<std::pair<int, Sign>>>& fats) {
        std::vector<SignedEdge> edges;
        for (auto [u, v, s] : slim_edges) edges.push_back({u, v, s});
        for (size_t f = 0; f < fats.size(); ++f)
            for (auto [v, s] : fats[f])
                edges.push_back({v, slim_count + static_cast<int>(f), s});
        std::vector<VertexLabel> labels(slim_count, VertexLabel::slim);
        labels.insert(labels.end(), fats.size(), VertexLabel::fat);
        return HoffmanSignedGraph::build(
            SignedGraph::build(slim_count + static_cast<int>(fats.size()), edges), labels);
    };

    std::vector<HoffmanSignedGraph> battery;
    // One slim vertex with three positive fat neighbors.
    battery.push_back(make(1, {}, {{{0, Sign::plus}}, {{0, Sign::plus}}, {{0, Sign::plus}}}));
    // One slim vertex with mixed-sign fat neighbors.
    battery.push_back(make(1, {}, {{{0, Sign::plus}}, {{0, Sign::minus}}}));
    // Positive edge whose endpoints share one positive fat neighbor.
    battery.push_back(make(2, {{0, 1, Sign::plus}}, {{{0, Sign::plus}, {1, Sign::plus}}}));
    // Negative edge, one shared mixed fat and one private fat.
    battery.push_back(make(2, {{0, 1, Sign::minus}},
                           {{{0, Sign::plus}, {1, Sign::minus}}, {{0, Sign::plus}}}));
    // Signed path on three slim vertices under one dominating fat vertex.
    battery.push_back(make(3, {{0, 1, Sign::plus}, {1, 2, Sign::minus}},
                           {{{0, Sign::plus}, {1, Sign::plus}, {2, Sign::plus}}}));
    // Signed triangle with two partially overlapping mixed fats.
    battery.push_back(make(3, {{0, 1, Sign::plus}, {1, 2, Sign::plus}, {0, 2, Sign::minus}},
                           {{{0, Sign::plus}, {1, Sign::plus}},
                            {{1, Sign::minus}, {2, Sign::minus}}}));
    return battery;
}

std::vector<SignedGraph> trichotomy_corpus(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> block_count_dist(2, 4);
    std::uniform_int_distribution<int> block_size_dist(4, 8);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    PatternFamily family = ktilde_family(2);
    std::vector<SignedGraph> corpus;
    while (static_cast<int>(corpus.size()) < count) {
        int blocks = block_count_dist(rng);
        std::vector<std::pair<int, int>> spans;  // [begin, end) per block
        int n = 0;
        for (int b = 0; b < blocks; ++b) {
            int size = block_size_dist(rng);
            spans.push_back({n, n + size});
            n += size;
        }
        std::vector<SignedEdge> edges;
        for (auto [lo, hi] : spans)
            for (int u = lo; u < hi; ++u)
                for (int v = u + 1; v < hi; ++v) edges.push_back({u, v, Sign::plus});

        // Apex vertices covering one block nearly fully with a pure sign.
        for (size_t b = 0; b < spans.size(); ++b) {
            if (coin(rng) < 0.5) continue;
            auto [lo, hi] = spans[b];
            Sign s = coin(rng) < 0.5 ? Sign::plus : Sign::minus;
            int skip = coin(rng) < 0.5 ? lo + static_cast<int>(rng() % (hi - lo)) : -1;
            int apex = n++;
            for (int v = lo; v < hi; ++v)
                if (v != skip) edges.push_back({v, apex, s});
        }

        // Sparse cross edges: at most one per vertex.
        std::vector<char> used(n, 0);
        for (size_t a = 0; a < spans.size(); ++a)
            for (size_t b = a + 1; b < spans.size(); ++b) {
                if (coin(rng) < 0.4) continue;
                int u = spans[a].first + static_cast<int>(rng() % (spans[a].second - spans[a].first));
                int v = spans[b].first + static_cast<int>(rng() % (spans[b].second - spans[b].first));
                if (used[u] || used[v]) continue;
                used[u] = used[v] = 1;
                edges.push_back({u, v, coin(rng) < 0.5 ? Sign::minus : Sign::plus});
            }

        SignedGraph g = SignedGraph::build(n, edges);
        CliqueCatalog cat = maximal_positive_cliques(g, 4);
        if (cat.cliques.empty()) continue;
        if (!is_pattern_free(g, family)) continue;
        corpus.push_back(std::move(g));
    }
    return corpus;
}

namespace {

SuiteResult switching_suite(std::uint64_t seed) {
    SuiteResult result{"switching", seed, {}};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size_dist(2, 12);
    for (int i = 0; i < 200; ++i) {
        int n = size_dist(rng);
        SignedGraph g = random_signed_graph(rng, n, 0.5, 0.5);
        VertexSet u = random_subset(rng, n);
        auto base = eigenvalues(adjacency_matrix(g)).eigenvalues;
        auto after = eigenvalues(adjacency_matrix(switched(g, u))).eigenvalues;
        bool ok = spectra_close(base, after, 1e-9);
        result.cases.push_back(make_case("switching_invariance[" + std::to_string(i) + "]", ok,
                                         ok ? "" : "eigenvalue multisets diverged",
                                         ok ? "" : graph_to_json(g).dump()));
    }
    return result;
}

SuiteResult interlacing_suite(std::uint64_t seed) {
    SuiteResult result{"interlacing", seed, {}};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size_dist(2, 12);
    for (int i = 0; i < 200; ++i) {
        int n = size_dist(rng);
        SignedGraph g = random_signed_graph(rng, n, 0.55, 0.4);
        VertexSet s = random_subset(rng, n);
        if (s.empty()) s.push_back(static_cast<int>(rng() % n));
        double whole = smallest_eigenvalue(g);
        double part = smallest_eigenvalue(induced_subgraph(g, s));
        bool ok = part >= whole - 1e-9;
        result.cases.push_back(make_case(
            "interlacing[" + std::to_string(i) + "]", ok,
            ok ? "" : "lambda_min rose above the induced subgraph: " + fmt(whole) + " vs " +
                          fmt(part),
            ok ? "" : graph_to_json(g).dump()));
    }
    return result;
}

SuiteResult hoffman_suite(std::uint64_t seed) {
    SuiteResult result{"hoffman", seed, {}};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 100; ++i) {
        HoffmanSignedGraph h = random_hoffman_graph(rng, 8, 4);
        std::string tag = "hoffman[" + std::to_string(i) + "]";
        std::string replay = hoffman_to_json(h).dump();

        VertexSet u = random_subset(rng, h.graph().vertex_count());
        auto base = hoffman_eigenvalues(h).eigenvalues;
        auto after = hoffman_eigenvalues(hoffman_switch(h, u)).eigenvalues;
        bool sw_ok = spectra_close(base, after, 1e-9);
        result.cases.push_back(make_case(tag + ".switch_invariance", sw_ok, "", sw_ok ? "" : replay));

        // Induced Hoffman subgraph keeps the smallest eigenvalue bounded below.
        VertexSet keep = random_subset(rng, h.graph().vertex_count());
        if (keep.empty()) keep.push_back(h.slim_vertices().front());
        VertexSet pruned;
        for (int v : keep) {
            if (h.label(v) == VertexLabel::slim) {
                pruned.push_back(v);
                continue;
            }
            bool has_neighbor = false;
            for (int w : keep)
                if (w != v && h.graph().adjacent(v, w) && h.label(w) == VertexLabel::slim)
                    has_neighbor = true;
            if (has_neighbor) pruned.push_back(v);
        }
        if (pruned.empty()) pruned.push_back(h.slim_vertices().front());
        VertexSet sorted = normalize_vertex_set(pruned);
        SignedGraph sub = induced_subgraph(h.graph(), sorted);
        std::vector<VertexLabel> sub_labels;
        for (int v : sorted) sub_labels.push_back(h.label(v));
        HoffmanSignedGraph hsub = HoffmanSignedGraph::build(sub, sub_labels);
        bool sub_ok = hoffman_smallest_eigenvalue(hsub) >=
                      hoffman_smallest_eigenvalue(h) - 1e-9;
        result.cases.push_back(make_case(tag + ".induced_lower_bound", sub_ok, "",
                                         sub_ok ? "" : replay));

        // Norm-m representation round trip at the smallest admissible m.
        double lmin = hoffman_smallest_eigenvalue(h);
        int m = std::max(1, static_cast<int>(std::ceil(-lmin - 1e-7)));
        bool rep_ok = true, reduced_ok = true, refuse_ok = true, block_ok = true;
        std::string rep_detail;
        try {
            Representation rep = build_representation(h, m);
            ReducedRepresentation red = reduce_representation(rep, h);
            IntMatrix s = special_matrix(h);
            for (size_t a = 0; a < red.slim_vertices.size() && reduced_ok; ++a)
                for (size_t b = 0; b < red.slim_vertices.size() && reduced_ok; ++b) {
                    double dot = 0.0;
                    for (size_t k = 0; k < red.vectors[a].size(); ++k)
                        dot += red.vectors[a][k] * red.vectors[b][k];
                    double want = s.at(static_cast<int>(a), static_cast<int>(b)) +
                                  (a == b ? m : 0);
                    if (std::abs(dot - want) > 1e-8) reduced_ok = false;
                }

            // Reduced and fat parts of the full representation are orthogonal
            // blocks: Gram = reduced Gram (+) identity.
            std::vector<std::vector<double>> basis = red.vectors;
            for (size_t vi = 0; vi < rep.vertices.size(); ++vi)
                if (h.label(rep.vertices[vi]) == VertexLabel::fat)
                    basis.push_back(rep.vectors[vi]);
            size_t ns = red.vectors.size();
            for (size_t a = 0; a < basis.size() && block_ok; ++a)
                for (size_t b = 0; b < basis.size() && block_ok; ++b) {
                    double dot = 0.0;
                    for (size_t k = 0; k < basis[a].size(); ++k) dot += basis[a][k] * basis[b][k];
                    double want;
                    if (a < ns && b < ns)
                        want = s.at(static_cast<int>(a), static_cast<int>(b)) + (a == b ? m : 0);
                    else if (a >= ns && b >= ns)
                        want = a == b ? 1.0 : 0.0;
                    else
                        want = 0.0;
                    if (std::abs(dot - want) > 1e-8) block_ok = false;
                }
        } catch (const std::exception& e) {
            rep_ok = false;
            rep_detail = e.what();
        }
        if (m >= 2 && lmin < -(m - 1) - 1e-7) {
            try {
                build_representation(h, m - 1);
                refuse_ok = false;  // must have refused
            } catch (const std::runtime_error&) {
            }
        }
        result.cases.push_back(
            make_case(tag + ".representation", rep_ok, rep_detail, rep_ok ? "" : replay));
        result.cases.push_back(
            make_case(tag + ".reduced_gram", reduced_ok, "", reduced_ok ? "" : replay));
        result.cases.push_back(
            make_case(tag + ".block_decomposition", block_ok, "", block_ok ? "" : replay));
        result.cases.push_back(
            make_case(tag + ".norm_refusal", refuse_ok, "", refuse_ok ? "" : replay));
    }
    return result;
}

SuiteResult trichotomy_suite(std::uint64_t seed) {
    SuiteResult result{"trichotomy", seed, {}};
    std::vector<SignedGraph> corpus = trichotomy_corpus(seed, 50);
    for (size_t i = 0; i < corpus.size(); ++i) {
        const SignedGraph& g = corpus[i];
        CliqueCatalog cat = maximal_positive_cliques(g, 4);
        int violations = 0;
        for (const PositiveClique& c : cat.cliques)
            violations += trichotomy_check(g, c, 2).violation_count;
        bool ok = violations == 0;
        result.cases.push_back(make_case("trichotomy_corpus[" + std::to_string(i) + "]", ok,
                                         ok ? "" : std::to_string(violations) + " violations",
                                         ok ? "" : graph_to_json(g).dump()));
    }

    SignedGraph bad = standard_family(FamilyKind::ktilde_minus, 2);
    TrichotomyReport report = trichotomy_check(bad, PositiveClique{{1, 2, 3, 4}}, 2);
    bool expected = report.violation_count == 1 && report.entries[0].vertex == 0 &&
                    report.entries[0].violation;
    result.cases.push_back(make_case("trichotomy_ktilde_minus_violation", expected,
                                     expected ? "" : "expected exactly one violation at vertex 0"));
    return result;
}

SuiteResult catalog_suite(std::uint64_t seed) {
    SuiteResult result{"catalog", seed, {}};
    ForbiddenCatalog cat = catalog_f_minus2();
    const double threshold = -1.0 - std::sqrt(2.0) + 1e-9;
    for (const CatalogEntry& e : cat.entries) {
        bool ok = e.lambda_min <= threshold;
        result.cases.push_back(make_case("catalog_bound[" + e.provenance + "]", ok,
                                         "lambda_min = " + fmt(e.lambda_min)));
    }
    result.cases.push_back(make_case("catalog_minus3_exact",
                                     cat.entries[0].matrix.at(0, 0) == -3 &&
                                         cat.entries[0].lambda_min == -3.0,
                                     "entry (-3) must report exactly -3"));
    bool found_pair = false;
    for (const CatalogEntry& e : cat.entries)
        if (e.matrix.rows() == 2 && e.matrix.at(0, 0) == -1 && e.matrix.at(0, 1) == 2) {
            auto ev = eigenvalues(e.matrix.to_symmetric()).eigenvalues;
            found_pair = std::abs(ev[0] + 3.0) <= 1e-9 && std::abs(ev[1] - 1.0) <= 1e-9;
        }
    result.cases.push_back(make_case("catalog_offdiag2_spectrum", found_pair,
                                     "[[-1,2],[2,-1]] must have spectrum {-3, 1}"));

    // Realizations: Hoffman graphs whose special matrices hit catalog entries.
    struct Realization {
        std::string name;
        HoffmanSignedGraph h;
    };
    auto build = [](int ns, const std::vector<std::tuple<int, int, Sign>>& slim_edges, int nf,
                    const std::vector<std::tuple<int, int, Sign>>& fat_edges) {
        std::vector<SignedEdge> edges;
        for (auto [u, v, s] : slim_edges) edges.push_back({u, v, s});
        for (auto [v, f, s] : fat_edges) edges.push_back({v, ns + f, s});
        std::vector<VertexLabel> labels(ns, VertexLabel::slim);
        labels.insert(labels.end(), nf, VertexLabel::fat);
        return HoffmanSignedGraph::build(SignedGraph::build(ns + nf, edges), labels);
    };
    std::vector<Realization> realizations;
    realizations.push_back({"minus3", build(1, {}, 3,
                                            {{0, 0, Sign::plus},
                                             {0, 1, Sign::plus},
                                             {0, 2, Sign::plus}})});
    realizations.push_back({"case_i_pair",
                            build(2, {}, 2,
                                  {{0, 0, Sign::plus}, {0, 1, Sign::plus}, {1, 0, Sign::minus}})});
    realizations.push_back({"case_ii_shared_fat",
                            build(2, {{0, 1, Sign::plus}}, 1,
                                  {{0, 0, Sign::plus}, {1, 0, Sign::minus}})});
    realizations.push_back({"case_ii_three_slim",
                            build(3, {}, 1,
                                  {{0, 0, Sign::plus}, {1, 0, Sign::plus}, {2, 0, Sign::minus}})});
    realizations.push_back({"case_ii_star",
                            build(3, {{0, 1, Sign::plus}, {0, 2, Sign::plus}}, 3,
                                  {{0, 0, Sign::plus}, {1, 1, Sign::plus}, {2, 2, Sign::plus}})});

    for (const Realization& real : realizations) {
        auto witness = contains_minimal_forbidden(real.h);
        result.cases.push_back(make_case("catalog_realization_detected[" + real.name + "]",
                                         witness.has_value()));
        // Minimality: every proper fat induced Hoffman subgraph stays >= -2.
        const SignedGraph& rg = real.h.graph();
        int n = rg.vertex_count();
        bool minimal = true;
        for (int mask = 1; mask < (1 << n) - 1 && minimal; ++mask) {
            VertexSet vs;
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1) vs.push_back(v);
            std::vector<VertexLabel> labels;
            for (int v : vs) labels.push_back(real.h.label(v));
            HoffmanSignedGraph sub;
            try {
                sub = HoffmanSignedGraph::build(induced_subgraph(rg, vs), labels);
            } catch (const std::invalid_argument&) {
                continue;  // not a valid Hoffman graph
            }
            if (sub.slim_vertices().empty() || !sub.is_fat()) continue;
            if (hoffman_smallest_eigenvalue(sub) < -2.0 - 1e-9) minimal = false;
        }
        result.cases.push_back(make_case("catalog_realization_minimal[" + real.name + "]",
                                         minimal));
    }

    HoffmanSignedGraph tame = build(1, {}, 1, {{0, 0, Sign::plus}});
    result.cases.push_back(make_case("catalog_tame_graph_clean",
                                     !contains_minimal_forbidden(tame).has_value()));
    return result;
}

SuiteResult convergence_suite(std::uint64_t seed) {
    SuiteResult result{"convergence", seed, {}};
    std::vector<HoffmanSignedGraph> battery = convergence_battery();
    std::vector<int> ns;
    for (int n = 1; n <= 50; ++n) ns.push_back(n);
    for (size_t i = 0; i < battery.size(); ++i) {
        const HoffmanSignedGraph& h = battery[i];
        ConvergenceProbe probe = convergence_probe(h, ns);
        bool bound_ok = true;
        for (auto [n, v] : probe.table)
            if (v < probe.limit - 1e-9) bound_ok = false;
        result.cases.push_back(make_case("expansion_lower_bound[" + std::to_string(i) + "]",
                                         bound_ok, "limit " + fmt(probe.limit)));
        double at200 = smallest_eigenvalue(expand(h, 200));
        bool limit_ok = std::abs(at200 - probe.limit) <= 0.05;
        result.cases.push_back(make_case(
            "expansion_limit[" + std::to_string(i) + "]", limit_ok,
            "lambda_min(G(h,200)) = " + fmt(at200) + ", target " + fmt(probe.limit)));
    }
    return result;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"switching", "interlacing", "hoffman", "trichotomy", "catalog", "convergence"};
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
    if (name == "switching") return switching_suite(seed);
    if (name == "interlacing") return interlacing_suite(seed);
    if (name == "hoffman") return hoffman_suite(seed);
    if (name == "trichotomy") return trichotomy_suite(seed);
    if (name == "catalog") return catalog_suite(seed);
    if (name == "convergence") return convergence_suite(seed);
    throw std::invalid_argument("unknown check suite: " + name);
}

}  // namespace sg::checks
