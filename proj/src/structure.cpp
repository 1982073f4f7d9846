#include "sg/structure.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "sg/lattice.hpp"
#include "sg/spectra.hpp"

namespace sg {

Decomposition decompose(const SignedGraph& g, const DecompositionParams& params, bool force) {
    if (params.m < 2) throw std::invalid_argument("decomposition requires m >= 2");
    if (params.n < 1) throw std::invalid_argument("decomposition requires n >= 1");
    if (params.lambda && *params.lambda > -1.0)
        throw std::invalid_argument("lambda must be at most -1");

    AssociatedHoffmanGraph assoc =
        associated_hoffman_graph(g, params.m, params.n, /*check_pattern_free=*/!force);

    Decomposition d;
    d.params = params;
    d.warnings = assoc.warnings;
    if (force) d.warnings.push_back("switching-free precondition not checked (--force)");

    std::set<std::pair<int, int>> covered;
    for (const FatSource& src : assoc.fat_sources) {
        DecompositionPiece piece;
        piece.vertices = src.split.combined();
        piece.graph = induced_subgraph(g, piece.vertices);
        piece.plus = src.split.plus;
        piece.minus = src.split.minus;
        piece.clique = src.clique;
        piece.fat_vertex = src.fat_vertex;
        for (const SignedEdge& e : piece.graph.edges())
            covered.insert({piece.vertices[e.u], piece.vertices[e.v]});
        d.pieces.push_back(std::move(piece));
    }

    std::vector<SignedEdge> residual_edges;
    for (const SignedEdge& e : g.edges())
        if (!covered.count({e.u, e.v})) residual_edges.push_back(e);
    d.residual = SignedGraph::build(g.vertex_count(), residual_edges);
    return d;
}

DecompositionReport verify_decomposition(const SignedGraph& g, const Decomposition& d) {
    DecompositionReport report;
    const int n = g.vertex_count();
    std::vector<int> membership(n, 0);

    std::set<std::pair<int, int>> covered;
    for (size_t i = 0; i < d.pieces.size(); ++i) {
        const DecompositionPiece& piece = d.pieces[i];
        std::string tag = "piece " + std::to_string(i);
        bool recomputable = true;
        try {
            NeighborhoodSplit split = m_neighborhoods(g, PositiveClique{piece.clique}, d.params.m);
            if (split.combined() != piece.vertices || split.plus != piece.plus ||
                split.minus != piece.minus) {
                report.integrity_issues.push_back(tag + ": stored neighborhood split does not "
                                                        "recompute from the clique");
                recomputable = false;
            }
            if (!(piece.graph == induced_subgraph(g, piece.vertices))) {
                report.integrity_issues.push_back(tag + ": stored graph is not the induced "
                                                        "subgraph on its vertex set");
                recomputable = false;
            }
        } catch (const std::exception& e) {
            report.integrity_issues.push_back(tag + ": not recomputable (" + e.what() + ")");
            recomputable = false;
        }

        for (int v : piece.vertices)
            if (v >= 0 && v < n) membership[v]++;
        for (const SignedEdge& e : piece.graph.edges())
            covered.insert({piece.vertices[e.u], piece.vertices[e.v]});

        if (recomputable) {
            QuasiPositiveClique q = quasi_positive_clique(g, PositiveClique{piece.clique},
                                                          d.params.m);
            report.plex_degrees.push_back(plex_degree(q.graph));
        } else {
            report.plex_degrees.push_back(-1);
        }
    }

    report.max_membership = 0;
    report.min_membership = n > 0 ? membership[0] : 0;
    for (int v = 0; v < n; ++v) {
        report.max_membership = std::max(report.max_membership, membership[v]);
        report.min_membership = std::min(report.min_membership, membership[v]);
        if (membership[v] == 0) report.uncovered_vertices.push_back(v);
    }

    for (size_t i = 0; i < d.pieces.size(); ++i)
        for (size_t j = i + 1; j < d.pieces.size(); ++j) {
            VertexSet inter;
            std::set_intersection(d.pieces[i].vertices.begin(), d.pieces[i].vertices.end(),
                                  d.pieces[j].vertices.begin(), d.pieces[j].vertices.end(),
                                  std::back_inserter(inter));
            report.max_pairwise_intersection =
                std::max(report.max_pairwise_intersection, static_cast<int>(inter.size()));
        }

    std::vector<SignedEdge> residual_edges;
    for (const SignedEdge& e : g.edges())
        if (!covered.count({e.u, e.v})) residual_edges.push_back(e);
    SignedGraph residual = SignedGraph::build(n, residual_edges);
    if (!(residual == d.residual))
        report.integrity_issues.push_back("stored residual does not match the recomputed one");
    for (int v = 0; v < n; ++v)
        report.residual_max_valency = std::max(report.residual_max_valency, residual.degree(v));

    if (d.params.lambda) {
        double lambda = *d.params.lambda;
        double floor_neg = std::floor(-lambda);
        int max_plex = 0;
        for (int p : report.plex_degrees) max_plex = std::max(max_plex, p);

        report.bounds_checked.push_back({"membership <= floor(-lambda)", floor_neg,
                                         static_cast<double>(report.max_membership),
                                         report.max_membership <= floor_neg});
        double plex_bound = std::floor(lambda * lambda + 2.0 * lambda + 2.0);
        report.bounds_checked.push_back({"plex degree <= floor(lambda^2+2lambda+2)", plex_bound,
                                         static_cast<double>(max_plex), max_plex <= plex_bound});
        double inter_bound = 4.0 * floor_neg - 4.0;
        report.bounds_checked.push_back({"pairwise intersection <= 4*floor(-lambda)-4",
                                         inter_bound,
                                         static_cast<double>(report.max_pairwise_intersection),
                                         report.max_pairwise_intersection <= inter_bound});
        if (d.params.kappa_inputs && d.params.kappa_inputs->residual_valency_bound) {
            double vb = static_cast<double>(*d.params.kappa_inputs->residual_valency_bound);
            report.bounds_checked.push_back({"residual valency <= supplied bound", vb,
                                             static_cast<double>(report.residual_max_valency),
                                             report.residual_max_valency <= vb});
        }
    }
    return report;
}

double lower_bound_from_kappa(long long t, long long kappa) {
    if (t < 2) throw std::invalid_argument("t must be at least 2");
    if (kappa < 1) throw std::invalid_argument("kappa must be positive");
    double td = static_cast<double>(t), kd = static_cast<double>(kappa);
    return -td * (td - 1.0) * (td - 2.0) * kd / 2.0 - 2.0 * td * kd + kd + td - 1.0;
}

namespace {

HoffmanSignedGraph fat_over_slim(int slim_count, int fat_count,
                                 const std::vector<std::pair<std::pair<int, int>, Sign>>& slim_edges,
                                 const std::vector<std::pair<std::pair<int, int>, Sign>>& fat_edges) {
    std::vector<SignedEdge> edges;
    for (const auto& [pair, sign] : slim_edges) edges.push_back({pair.first, pair.second, sign});
    for (const auto& [pair, sign] : fat_edges)
        edges.push_back({pair.first, slim_count + pair.second, sign});
    std::vector<VertexLabel> labels(slim_count, VertexLabel::slim);
    labels.insert(labels.end(), fat_count, VertexLabel::fat);
    return HoffmanSignedGraph::build(SignedGraph::build(slim_count + fat_count, edges), labels);
}

// Canonical key of a slim-slim sign assignment under vertex permutations;
// entries are the sign values of each unordered pair.
std::vector<int> canonical_slim_signature(int k, const std::vector<int>& pair_signs) {
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    std::vector<int> best;
    auto pair_index = [k](int a, int b) {
        if (a > b) std::swap(a, b);
        return a * k - a * (a + 1) / 2 + (b - a - 1);
    };
    do {
        std::vector<int> sig;
        sig.reserve(pair_signs.size());
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                sig.push_back(pair_signs[pair_index(perm[a], perm[b])]);
        if (best.empty() || sig < best) best = sig;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

SigmaFamilies sigma_families(double lambda) {
    if (!(lambda < -1.0)) throw std::invalid_argument("lambda must be below -1");
    SigmaFamilies fam;

    const int floor_neg = static_cast<int>(std::floor(-lambda));

    // h0: one slim vertex positively tied to floor(-lambda)+1 fat vertices.
    {
        std::vector<std::pair<std::pair<int, int>, Sign>> fat_edges;
        for (int f = 0; f <= floor_neg; ++f) fat_edges.push_back({{0, f}, Sign::plus});
        fam.h0 = fat_over_slim(1, floor_neg + 1, {}, fat_edges);
    }

    // F1: one fat vertex positively adjacent to every slim vertex; slim
    // vertex 0 is non-positively adjacent to all the others. The slim count
    // makes the clique-plus-star comparison matrix dominate strictly, so
    // every member sits strictly below lambda.
    {
        double shifted = (lambda + 1.0) * (lambda + 1.0);
        int k = static_cast<int>(std::floor(shifted)) + 2;
        int others = k - 1;
        int other_pairs = others * (others - 1) / 2;
        double raw = std::pow(2.0, others) * std::pow(3.0, other_pairs);
        if (raw > 250000.0)
            throw std::invalid_argument("sigma family enumeration too large for this lambda");

        std::set<std::vector<int>> seen;
        std::vector<int> x_signs(others);  // 0 => non-adjacent, -1 => negative
        for (long long mask = 0; mask < (1LL << others); ++mask) {
            for (int i = 0; i < others; ++i) x_signs[i] = (mask >> i & 1) ? -1 : 0;
            std::vector<int> rest(other_pairs, 0);
            long long total = 1;
            for (int i = 0; i < other_pairs; ++i) total *= 3;
            for (long long code = 0; code < total; ++code) {
                long long c = code;
                for (int i = 0; i < other_pairs; ++i) {
                    rest[i] = static_cast<int>(c % 3) - 1;  // -1, 0, +1
                    c /= 3;
                }
                // Full pair list over slim vertices 0..k-1.
                std::vector<int> pair_signs;
                int ri = 0;
                for (int a = 0; a < k; ++a)
                    for (int b = a + 1; b < k; ++b) {
                        if (a == 0)
                            pair_signs.push_back(x_signs[b - 1]);
                        else
                            pair_signs.push_back(rest[ri++]);
                    }
                std::vector<int> sig = canonical_slim_signature(k, pair_signs);
                if (!seen.insert(sig).second) continue;

                std::vector<std::pair<std::pair<int, int>, Sign>> slim_edges;
                int pi = 0;
                for (int a = 0; a < k; ++a)
                    for (int b = a + 1; b < k; ++b, ++pi) {
                        if (pair_signs[pi] == 0) continue;
                        slim_edges.push_back(
                            {{a, b}, pair_signs[pi] > 0 ? Sign::plus : Sign::minus});
                    }
                std::vector<std::pair<std::pair<int, int>, Sign>> fat_edges;
                for (int v = 0; v < k; ++v) fat_edges.push_back({{v, 0}, Sign::plus});
                fam.f1.push_back(fat_over_slim(k, 1, slim_edges, fat_edges));
            }
        }
    }

    // F2: two fat vertices, each positively adjacent to every slim vertex.
    {
        int k = floor_neg;
        int pairs = k * (k - 1) / 2;
        double raw = std::pow(3.0, pairs);
        if (raw > 250000.0)
            throw std::invalid_argument("sigma family enumeration too large for this lambda");
        long long total = 1;
        for (int i = 0; i < pairs; ++i) total *= 3;
        std::set<std::vector<int>> seen;
        for (long long code = 0; code < total; ++code) {
            long long c = code;
            std::vector<int> pair_signs(pairs);
            for (int i = 0; i < pairs; ++i) {
                pair_signs[i] = static_cast<int>(c % 3) - 1;
                c /= 3;
            }
            std::vector<int> sig = canonical_slim_signature(k, pair_signs);
            if (!seen.insert(sig).second) continue;

            std::vector<std::pair<std::pair<int, int>, Sign>> slim_edges;
            int pi = 0;
            for (int a = 0; a < k; ++a)
                for (int b = a + 1; b < k; ++b, ++pi) {
                    if (pair_signs[pi] == 0) continue;
                    slim_edges.push_back({{a, b}, pair_signs[pi] > 0 ? Sign::plus : Sign::minus});
                }
            std::vector<std::pair<std::pair<int, int>, Sign>> fat_edges;
            for (int v = 0; v < k; ++v) {
                fat_edges.push_back({{v, 0}, Sign::plus});
                fat_edges.push_back({{v, 1}, Sign::plus});
            }
            fam.f2.push_back(fat_over_slim(k, 2, slim_edges, fat_edges));
        }
    }

    auto assert_below = [lambda](const HoffmanSignedGraph& h) {
        double lmin = hoffman_smallest_eigenvalue(h);
        if (!(lmin < lambda))
            throw std::logic_error("sigma family member does not sit below lambda: " +
                                   std::to_string(lmin));
    };
    assert_below(fam.h0);
    for (const auto& h : fam.f1) assert_below(h);
    for (const auto& h : fam.f2) assert_below(h);
    return fam;
}

ForbiddenCatalog catalog_f_minus2() {
    ForbiddenCatalog cat;
    auto add = [&cat](const std::vector<std::vector<long long>>& rows, std::string provenance) {
        CatalogEntry e;
        int n = static_cast<int>(rows.size());
        e.matrix = IntMatrix(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) e.matrix.at(i, j) = rows[i][j];
        e.provenance = std::move(provenance);
        e.lambda_min = eigenvalues(e.matrix.to_symmetric()).eigenvalues.front();
        cat.entries.push_back(std::move(e));
    };

    add({{-3}}, "case_i_single");
    for (long long a1 : {-1LL, -2LL})
        for (long long mag = 1; mag <= 1 - a1; ++mag)
            for (long long a2 : {mag, -mag})
                add({{-2, a2}, {a2, a1}}, "case_i_family a1=" + std::to_string(a1) +
                                              " a2=" + std::to_string(a2));

    add({{-1, 2}, {2, -1}}, "case_ii_1");
    add({{-1, -2}, {-2, -1}}, "case_ii_2");
    add({{-1, -1, 1}, {-1, -1, 1}, {1, 1, -1}}, "case_ii_3");
    add({{-1, -1, -1}, {-1, -1, -1}, {-1, -1, -1}}, "case_ii_4");
    add({{-1, 1, 1}, {1, -1, 0}, {1, 0, -1}}, "case_ii_5");
    add({{-1, -1, 1}, {-1, -1, 0}, {1, 0, -1}}, "case_ii_6");
    add({{-1, -1, -1}, {-1, -1, 0}, {-1, 0, -1}}, "case_ii_7");

    const double threshold = -1.0 - std::sqrt(2.0) + 1e-9;
    for (const CatalogEntry& e : cat.entries)
        if (e.lambda_min > threshold)
            throw std::logic_error("catalog entry above -1-sqrt(2): " + e.provenance);
    return cat;
}

namespace {

bool matches_up_to_conjugation(const IntMatrix& a, const IntMatrix& b) {
    int n = a.rows();
    if (b.rows() != n) return false;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        for (int signs = 0; signs < (1 << n); signs += 2) {  // fix sign of vertex 0
            bool ok = true;
            for (int i = 0; i < n && ok; ++i)
                for (int j = 0; j < n && ok; ++j) {
                    long long di = (signs >> i & 1) ? -1 : 1;
                    long long dj = (signs >> j & 1) ? -1 : 1;
                    if (di * dj * a.at(perm[i], perm[j]) != b.at(i, j)) ok = false;
                }
            if (ok) return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

std::optional<ForbiddenWitness> contains_minimal_forbidden(const HoffmanSignedGraph& h) {
    if (!h.is_fat())
        throw std::invalid_argument("minimal-forbidden search requires a fat Hoffman graph");
    ForbiddenCatalog cat = catalog_f_minus2();

    const std::vector<int>& slim = h.slim_vertices();
    const std::vector<int>& fat = h.fat_vertices();
    const int ns = static_cast<int>(slim.size());

    std::vector<VertexSet> slim_subsets;
    for (int a = 0; a < ns; ++a) {
        slim_subsets.push_back({slim[a]});
        for (int b = a + 1; b < ns; ++b) {
            slim_subsets.push_back({slim[a], slim[b]});
            for (int c = b + 1; c < ns; ++c) slim_subsets.push_back({slim[a], slim[b], slim[c]});
        }
    }

    for (const VertexSet& s : slim_subsets) {
        // Fat candidates must touch the chosen slim set.
        VertexSet fat_candidates;
        for (int f : fat)
            for (int v : s)
                if (h.graph().adjacent(f, v)) {
                    fat_candidates.push_back(f);
                    break;
                }
        int fc = static_cast<int>(fat_candidates.size());
        std::vector<VertexSet> fat_subsets;
        for (long long mask = 1; mask < (1LL << fc); ++mask) {
            if (__builtin_popcountll(mask) > 4) continue;
            VertexSet fs;
            for (int i = 0; i < fc; ++i)
                if (mask >> i & 1) fs.push_back(fat_candidates[i]);
            fat_subsets.push_back(std::move(fs));
        }
        for (const VertexSet& fs : fat_subsets) {
            // The induced Hoffman subgraph must be fat and well-formed.
            bool ok = true;
            for (int v : s) {
                bool has_fat = false;
                for (int f : fs)
                    if (h.graph().adjacent(v, f)) has_fat = true;
                if (!has_fat) ok = false;
            }
            for (int f : fs) {
                bool has_nbr = false;
                for (int v : s)
                    if (h.graph().adjacent(v, f)) has_nbr = true;
                if (!has_nbr) ok = false;
            }
            if (!ok) continue;

            int k = static_cast<int>(s.size());
            IntMatrix sp(k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) {
                    long long v = h.graph().sign_value(s[i], s[j]);
                    for (int f : fs)
                        v -= static_cast<long long>(h.graph().sign_value(s[i], f)) *
                             h.graph().sign_value(s[j], f);
                    sp.at(i, j) = v;
                }
            for (size_t ci = 0; ci < cat.entries.size(); ++ci)
                if (matches_up_to_conjugation(sp, cat.entries[ci].matrix)) {
                    ForbiddenWitness w;
                    w.slim = s;
                    w.fat = fs;
                    w.catalog_index = static_cast<int>(ci);
                    return w;
                }
        }
    }
    return std::nullopt;
}

SmallClassification classify_small(const SignedGraph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("graph must be non-empty");
    if (!is_connected(g)) throw std::invalid_argument("classification requires a connected graph");

    SmallClassification out;
    const int n = g.vertex_count();

    // A connected non-complete underlying graph has an induced two-edge path,
    // which is switching equivalent to (K_{1,2},+).
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (g.adjacent(a, b)) continue;
            for (int mid = 0; mid < n; ++mid)
                if (g.adjacent(a, mid) && g.adjacent(b, mid)) {
                    out.cls = SmallClass::contains_sqrt2_obstruction;
                    out.obstruction = normalize_vertex_set({a, mid, b});
                    out.obstruction_kind = "star_plus_2";
                    return out;
                }
            // No common neighbor: walk a shortest path and take its head.
            std::vector<int> prev(n, -1);
            std::vector<char> seen(n, 0);
            std::vector<int> queue{a};
            seen[a] = 1;
            for (size_t qi = 0; qi < queue.size(); ++qi) {
                int v = queue[qi];
                for (int u = 0; u < n; ++u)
                    if (g.adjacent(v, u) && !seen[u]) {
                        seen[u] = 1;
                        prev[u] = v;
                        queue.push_back(u);
                    }
            }
            // Path b -> a; its first three vertices induce a two-edge path.
            int x = b, y = prev[b], z = prev[y];
            out.cls = SmallClass::contains_sqrt2_obstruction;
            out.obstruction = normalize_vertex_set({x, y, z});
            out.obstruction_kind = "star_plus_2";
            return out;
        }

    // Complete underlying graph: potentials off vertex 0 decide balance.
    std::vector<int> pot(n, 1);
    for (int v = 1; v < n; ++v) pot[v] = g.sign_value(0, v);
    for (int u = 1; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.sign_value(u, v) != pot[u] * pot[v]) {
                out.cls = SmallClass::contains_sqrt2_obstruction;
                out.obstruction = normalize_vertex_set({0, u, v});
                out.obstruction_kind = "complete_minus_3";
                return out;
            }
    out.cls = SmallClass::positive_clique_class;
    for (int v = 0; v < n; ++v)
        if (pot[v] < 0) out.switch_set.push_back(v);
    return out;
}

}  // namespace sg
