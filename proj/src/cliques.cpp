#include "sg/cliques.hpp"

#include <algorithm>
#include <stdexcept>

namespace sg {

namespace {

void require_positive_clique(const SignedGraph& g, const PositiveClique& c) {
    for (size_t i = 0; i < c.vertices.size(); ++i) {
        int u = c.vertices[i];
        if (u < 0 || u >= g.vertex_count())
            throw std::invalid_argument("clique vertex out of range: " + std::to_string(u));
        for (size_t j = i + 1; j < c.vertices.size(); ++j)
            if (g.sign_value(u, c.vertices[j]) != 1)
                throw std::invalid_argument("vertex set is not a positive clique: pair (" +
                                            std::to_string(u) + "," +
                                            std::to_string(c.vertices[j]) + ")");
    }
}

using Words = std::vector<std::uint64_t>;

struct BitGraph {
    int n;
    int words;
    std::vector<Words> adj;

    explicit BitGraph(const SignedGraph& g)
        : n(g.vertex_count()), words((n + 63) / 64), adj(n, Words(words, 0)) {
        for (const SignedEdge& e : g.edges())
            if (e.sign == Sign::plus) {
                adj[e.u][e.v / 64] |= 1ULL << (e.v % 64);
                adj[e.v][e.u / 64] |= 1ULL << (e.u % 64);
            }
    }
};

int popcount_all(const Words& w) {
    int c = 0;
    for (std::uint64_t x : w) c += __builtin_popcountll(x);
    return c;
}

int popcount_and(const Words& a, const Words& b) {
    int c = 0;
    for (size_t i = 0; i < a.size(); ++i) c += __builtin_popcountll(a[i] & b[i]);
    return c;
}

void bron_kerbosch(const BitGraph& bg, Words& r, Words p, Words x,
                   std::vector<PositiveClique>& out) {
    if (popcount_all(p) == 0 && popcount_all(x) == 0) {
        PositiveClique c;
        for (int v = 0; v < bg.n; ++v)
            if (r[v / 64] >> (v % 64) & 1) c.vertices.push_back(v);
        out.push_back(std::move(c));
        return;
    }
    int pivot = -1, best = -1;
    for (int v = 0; v < bg.n; ++v) {
        bool in_p = p[v / 64] >> (v % 64) & 1;
        bool in_x = x[v / 64] >> (v % 64) & 1;
        if (!in_p && !in_x) continue;
        int cnt = popcount_and(p, bg.adj[v]);
        if (cnt > best) {
            best = cnt;
            pivot = v;
        }
    }
    for (int v = 0; v < bg.n; ++v) {
        if (!(p[v / 64] >> (v % 64) & 1)) continue;
        if (bg.adj[pivot][v / 64] >> (v % 64) & 1) continue;
        Words p2(bg.words), x2(bg.words);
        for (int w = 0; w < bg.words; ++w) {
            p2[w] = p[w] & bg.adj[v][w];
            x2[w] = x[w] & bg.adj[v][w];
        }
        r[v / 64] |= 1ULL << (v % 64);
        bron_kerbosch(bg, r, std::move(p2), std::move(x2), out);
        r[v / 64] &= ~(1ULL << (v % 64));
        p[v / 64] &= ~(1ULL << (v % 64));
        x[v / 64] |= 1ULL << (v % 64);
    }
}

}  // namespace

CliqueCatalog maximal_positive_cliques(const SignedGraph& g, int n_min) {
    if (n_min < 1) throw std::invalid_argument("n_min must be positive");
    CliqueCatalog cat;
    cat.n_min = n_min;
    if (g.vertex_count() == 0) return cat;
    BitGraph bg(g);
    Words r(bg.words, 0), p(bg.words, 0), x(bg.words, 0);
    for (int v = 0; v < bg.n; ++v) p[v / 64] |= 1ULL << (v % 64);
    std::vector<PositiveClique> all;
    bron_kerbosch(bg, r, std::move(p), std::move(x), all);
    for (PositiveClique& c : all)
        if (static_cast<int>(c.vertices.size()) >= n_min) cat.cliques.push_back(std::move(c));
    std::sort(cat.cliques.begin(), cat.cliques.end(),
              [](const PositiveClique& a, const PositiveClique& b) {
                  return a.vertices < b.vertices;
              });
    return cat;
}

bool NeighborhoodSplit::disjoint() const { return overlap().empty(); }

VertexSet NeighborhoodSplit::overlap() const {
    VertexSet out;
    std::set_intersection(plus.begin(), plus.end(), minus.begin(), minus.end(),
                          std::back_inserter(out));
    return out;
}

VertexSet NeighborhoodSplit::combined() const {
    VertexSet out;
    std::set_union(plus.begin(), plus.end(), minus.begin(), minus.end(),
                   std::back_inserter(out));
    return out;
}

NeighborhoodSplit m_neighborhoods(const SignedGraph& g, const PositiveClique& c, int m) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    require_positive_clique(g, c);
    NeighborhoodSplit split;
    split.m = m;
    for (int x = 0; x < g.vertex_count(); ++x) {
        int pos = 0, neg = 0;
        for (int u : c.vertices) {
            int s = g.sign_value(x, u);
            if (s > 0) pos++;
            if (s < 0) neg++;
        }
        bool in_plus = pos >= m, in_minus = neg >= m;
        if (in_plus) split.plus.push_back(x);
        if (in_minus) split.minus.push_back(x);
        if (!in_plus && !in_minus) split.rest.push_back(x);
    }
    return split;
}

TrichotomyReport trichotomy_check(const SignedGraph& g, const PositiveClique& c, int m) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    require_positive_clique(g, c);
    if (static_cast<int>(c.vertices.size()) < 3 * m - 2)
        throw std::invalid_argument("trichotomy requires a clique with at least 3m-2 vertices");

    VertexSet cset = normalize_vertex_set(c.vertices);
    TrichotomyReport report;
    for (int x = 0; x < g.vertex_count(); ++x) {
        TrichotomyEntry e;
        e.vertex = x;
        VertexSet pos, neg, non;
        for (int u : cset) {
            if (u == x) continue;
            int s = g.sign_value(x, u);
            if (s > 0)
                pos.push_back(u);
            else if (s < 0)
                neg.push_back(u);
            else
                non.push_back(u);
        }
        e.pos_in_clique = static_cast<int>(pos.size());
        e.neg_in_clique = static_cast<int>(neg.size());
        e.non_in_clique = static_cast<int>(non.size());

        bool in_plus = e.pos_in_clique >= m;
        bool in_minus = e.neg_in_clique >= m;
        bool many_non = e.non_in_clique >= m;

        auto make_witness = [&](const VertexSet& a, const VertexSet& b) {
            VertexSet w{x};
            w.insert(w.end(), a.begin(), a.begin() + m);
            w.insert(w.end(), b.begin(), b.begin() + m);
            return normalize_vertex_set(std::move(w));
        };

        if (in_plus && in_minus) {
            e.violation = true;
            e.implied_pattern = "ktilde_minus";
            e.witness = make_witness(pos, neg);
        } else if (in_plus && many_non) {
            e.violation = true;
            e.implied_pattern = "ktilde_zero";
            e.witness = make_witness(pos, non);
        } else if (in_minus && many_non) {
            // Switching on {x} turns this into the zero variant.
            e.violation = true;
            e.implied_pattern = "ktilde_zero";
            e.witness = make_witness(neg, non);
        } else if (in_plus) {
            e.case_id = 1;
        } else if (in_minus) {
            e.case_id = 2;
        } else {
            e.case_id = 3;
        }
        if (e.violation) report.violation_count++;
        report.entries.push_back(std::move(e));
    }
    return report;
}

CliqueRelationEvidence clique_relation(const SignedGraph& g, const PositiveClique& c,
                                       const PositiveClique& c_prime, int m) {
    if (m < 2) throw std::invalid_argument("clique relation requires m >= 2");
    require_positive_clique(g, c);
    require_positive_clique(g, c_prime);
    long long need = 2LL * (static_cast<long long>(m) * m + m);
    if (static_cast<long long>(c.vertices.size()) < need ||
        static_cast<long long>(c_prime.vertices.size()) < need)
        throw std::invalid_argument("clique relation requires cliques of size >= 2(m^2+m)");

    NeighborhoodSplit sc = m_neighborhoods(g, c, m);
    NeighborhoodSplit scp = m_neighborhoods(g, c_prime, m);

    CliqueRelationEvidence ev;
    VertexSet cp = normalize_vertex_set(c_prime.vertices);
    VertexSet in_plus, in_minus;
    std::set_intersection(cp.begin(), cp.end(), sc.plus.begin(), sc.plus.end(),
                          std::back_inserter(in_plus));
    std::set_intersection(cp.begin(), cp.end(), sc.minus.begin(), sc.minus.end(),
                          std::back_inserter(in_minus));
    ev.other_in_plus = static_cast<int>(in_plus.size());
    ev.other_in_minus = static_cast<int>(in_minus.size());
    for (int x : cp) {
        if (std::binary_search(in_plus.begin(), in_plus.end(), x) ||
            std::binary_search(in_minus.begin(), in_minus.end(), x))
            continue;
        int nbrs = 0;
        for (int u : c.vertices)
            if (u != x && g.adjacent(x, u)) nbrs++;
        ev.max_rest_neighbors = std::max(ev.max_rest_neighbors, nbrs);
    }
    bool separated = ev.other_in_plus <= m - 1 && ev.other_in_minus <= m - 1 &&
                     ev.max_rest_neighbors <= 2 * m - 2;
    ev.unions_equal = sc.combined() == scp.combined();

    if (separated && !ev.unions_equal) {
        ev.relation = CliqueRelation::separated;
        return ev;
    }
    if (ev.unions_equal && !separated) {
        ev.relation = CliqueRelation::same_neighborhood;
        return ev;
    }
    throw std::runtime_error(
        "lemma violation: clique pair matches " +
        std::string(separated ? "both dichotomy cases" : "neither dichotomy case") +
        " (|C' in plus| = " + std::to_string(ev.other_in_plus) +
        ", |C' in minus| = " + std::to_string(ev.other_in_minus) +
        ", max rest neighbors = " + std::to_string(ev.max_rest_neighbors) +
        "); the host is not switching-free for this m");
}

QuasiPositiveClique quasi_positive_clique(const SignedGraph& g, const PositiveClique& c, int m) {
    NeighborhoodSplit split = m_neighborhoods(g, c, m);
    if (!split.disjoint())
        throw std::invalid_argument("quasi-positive-clique undefined: vertex " +
                                    std::to_string(split.overlap().front()) +
                                    " lies in both m-neighborhoods");
    QuasiPositiveClique q;
    q.vertices = split.combined();
    q.switch_set = split.minus;
    SignedGraph sub = induced_subgraph(g, q.vertices);
    VertexSet local_minus;
    for (size_t i = 0; i < q.vertices.size(); ++i)
        if (std::binary_search(split.minus.begin(), split.minus.end(), q.vertices[i]))
            local_minus.push_back(static_cast<int>(i));
    q.graph = switched(sub, local_minus);
    return q;
}

int plex_degree(const SignedGraph& g) {
    int worst = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int non = 0;
        for (int u = 0; u < g.vertex_count(); ++u)
            if (u != v && g.sign_value(v, u) != 1) non++;
        worst = std::max(worst, non);
    }
    return worst + 1;
}

}  // namespace sg
