#include "sg/hoffman.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sg {

SymmetricMatrix IntMatrix::to_symmetric() const {
    if (rows_ != cols_) throw std::invalid_argument("matrix is not square");
    SymmetricMatrix m(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = i; j < cols_; ++j) {
            if (at(i, j) != at(j, i)) throw std::invalid_argument("matrix is not symmetric");
            m.set(i, j, static_cast<double>(at(i, j)));
        }
    return m;
}

HoffmanSignedGraph HoffmanSignedGraph::build(SignedGraph graph, std::vector<VertexLabel> labels) {
    if (static_cast<int>(labels.size()) != graph.vertex_count())
        throw std::invalid_argument("label list length must match vertex count");
    HoffmanSignedGraph h;
    for (int v = 0; v < graph.vertex_count(); ++v)
        (labels[v] == VertexLabel::slim ? h.slim_ : h.fat_).push_back(v);
    for (int f : h.fat_) {
        if (graph.degree(f) == 0)
            throw std::invalid_argument("fat vertex " + std::to_string(f) + " has no neighbor");
        for (int f2 : h.fat_)
            if (f2 > f && graph.adjacent(f, f2))
                throw std::invalid_argument("fat vertices " + std::to_string(f) + " and " +
                                            std::to_string(f2) + " are adjacent");
    }
    h.graph_ = std::move(graph);
    h.labels_ = std::move(labels);
    return h;
}

bool HoffmanSignedGraph::is_fat() const {
    for (int s : slim_) {
        bool has_fat = false;
        for (int f : fat_)
            if (graph_.adjacent(s, f)) {
                has_fat = true;
                break;
            }
        if (!has_fat) return false;
    }
    return true;
}

IntMatrix special_matrix(const HoffmanSignedGraph& h) {
    const std::vector<int>& slim = h.slim_vertices();
    const int ns = static_cast<int>(slim.size());
    IntMatrix s(ns, ns);
    for (int i = 0; i < ns; ++i)
        for (int j = 0; j < ns; ++j) {
            long long v = h.graph().sign_value(slim[i], slim[j]);
            for (int f : h.fat_vertices())
                v -= static_cast<long long>(h.graph().sign_value(slim[i], f)) *
                     h.graph().sign_value(slim[j], f);
            s.at(i, j) = v;
        }
    return s;
}

Spectrum hoffman_eigenvalues(const HoffmanSignedGraph& h) {
    return eigenvalues(special_matrix(h).to_symmetric());
}

double hoffman_smallest_eigenvalue(const HoffmanSignedGraph& h) {
    return hoffman_eigenvalues(h).eigenvalues.front();
}

HoffmanSignedGraph hoffman_switch(const HoffmanSignedGraph& h, const VertexSet& u) {
    return HoffmanSignedGraph::build(switched(h.graph(), u), h.labels());
}

SignedGraph expand(const HoffmanSignedGraph& h, int n) {
    if (n < 1) throw std::invalid_argument("expansion parameter n must be positive");
    const std::vector<int>& slim = h.slim_vertices();
    const std::vector<int>& fat = h.fat_vertices();
    std::vector<int> local(h.graph().vertex_count(), -1);
    for (size_t i = 0; i < slim.size(); ++i) local[slim[i]] = static_cast<int>(i);

    int total = static_cast<int>(slim.size() + fat.size() * static_cast<size_t>(n));
    std::vector<SignedEdge> edges;
    for (const SignedEdge& e : h.graph().edges())
        if (local[e.u] >= 0 && local[e.v] >= 0)
            edges.push_back({local[e.u], local[e.v], e.sign});
    for (size_t fi = 0; fi < fat.size(); ++fi) {
        int base = static_cast<int>(slim.size()) + static_cast<int>(fi) * n;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) edges.push_back({base + a, base + b, Sign::plus});
        for (int s : slim) {
            int sv = h.graph().sign_value(s, fat[fi]);
            if (sv == 0) continue;
            Sign sign = sv > 0 ? Sign::plus : Sign::minus;
            for (int a = 0; a < n; ++a) edges.push_back({local[s], base + a, sign});
        }
    }
    return SignedGraph::build(total, edges);
}

ConvergenceProbe convergence_probe(const HoffmanSignedGraph& h, const std::vector<int>& n_values) {
    if (n_values.empty()) throw std::invalid_argument("n_values must be nonempty");
    ConvergenceProbe probe;
    probe.limit = hoffman_smallest_eigenvalue(h);
    for (int n : n_values) probe.table.emplace_back(n, smallest_eigenvalue(expand(h, n)));
    return probe;
}

AssociatedHoffmanGraph associated_hoffman_graph(const SignedGraph& g, int m, int n,
                                                bool check_pattern_free) {
    if (m < 2) throw std::invalid_argument("associated Hoffman graph requires m >= 2");
    if (n < 1) throw std::invalid_argument("associated Hoffman graph requires n >= 1");

    AssociatedHoffmanGraph out;
    out.m = m;
    out.n = n;
    long long threshold = 2LL * (static_cast<long long>(m) * m + m);
    if (n < threshold)
        out.warnings.push_back("n = " + std::to_string(n) + " is below the threshold 2(m^2+m) = " +
                               std::to_string(threshold) + "; construction is exploratory");

    if (check_pattern_free) {
        if (auto hit = find_pattern(g, ktilde_family(m))) {
            std::string verts;
            for (int v : hit->vertices) verts += (verts.empty() ? "" : ",") + std::to_string(v);
            throw std::invalid_argument(
                "graph is not ktilde-switching-free: witness {" + verts + "} matches " +
                (hit->pattern_index == 0 ? "ktilde_zero" : "ktilde_minus"));
        }
    }

    CliqueCatalog cat = maximal_positive_cliques(g, n);
    // Group cliques by combined neighborhood; the lexicographically smallest
    // clique of each group is the canonical representative.
    std::map<VertexSet, std::pair<VertexSet, NeighborhoodSplit>> groups;
    for (const PositiveClique& c : cat.cliques) {
        NeighborhoodSplit split = m_neighborhoods(g, c, m);
        if (!split.disjoint()) {
            int x = split.overlap().front();
            VertexSet pos, neg;
            for (int u : c.vertices) {
                int s = g.sign_value(x, u);
                if (s > 0 && static_cast<int>(pos.size()) < m) pos.push_back(u);
                if (s < 0 && static_cast<int>(neg.size()) < m) neg.push_back(u);
            }
            VertexSet w{x};
            w.insert(w.end(), pos.begin(), pos.end());
            w.insert(w.end(), neg.begin(), neg.end());
            w = normalize_vertex_set(std::move(w));
            std::string verts;
            for (int v : w) verts += (verts.empty() ? "" : ",") + std::to_string(v);
            throw std::invalid_argument("m-neighborhoods of a clique overlap at vertex " +
                                        std::to_string(x) + "; ktilde witness {" + verts + "}");
        }
        VertexSet key = split.combined();
        auto it = groups.find(key);
        if (it == groups.end()) {
            groups.emplace(std::move(key), std::make_pair(c.vertices, split));
        } else {
            // Members of one group must agree on the split up to swapping
            // the two sides; anything else contradicts the dichotomy lemma.
            const NeighborhoodSplit& have = it->second.second;
            bool same = have.plus == split.plus && have.minus == split.minus;
            bool swapped = have.plus == split.minus && have.minus == split.plus;
            if (!same && !swapped)
                throw std::runtime_error(
                    "lemma violation: cliques with equal combined neighborhoods disagree on "
                    "the plus/minus split; the host is not switching-free for this m");
            if (c.vertices < it->second.first) it->second.first = c.vertices;
        }
    }

    const int base = g.vertex_count();
    int r = static_cast<int>(groups.size());
    std::vector<SignedEdge> edges = g.edges();
    std::vector<VertexLabel> labels(base, VertexLabel::slim);
    labels.insert(labels.end(), r, VertexLabel::fat);

    int fi = 0;
    for (const auto& [key, rep] : groups) {
        const auto& [clique, split] = rep;
        int fat_vertex = base + fi;
        for (int v : split.plus) edges.push_back({v, fat_vertex, Sign::plus});
        for (int v : split.minus) edges.push_back({v, fat_vertex, Sign::minus});
        FatSource src;
        src.fat_vertex = fat_vertex;
        src.clique = clique;
        src.split = split;
        out.fat_sources.push_back(std::move(src));
        fi++;
    }
    out.host = HoffmanSignedGraph::build(SignedGraph::build(base + r, edges), labels);
    return out;
}

std::vector<int> fat_count_per_vertex(const AssociatedHoffmanGraph& assoc) {
    int base = static_cast<int>(assoc.host.slim_vertices().size());
    std::vector<int> counts(base, 0);
    for (int v = 0; v < base; ++v)
        for (int f : assoc.host.fat_vertices())
            if (assoc.host.graph().adjacent(v, f)) counts[v]++;
    return counts;
}

std::optional<VertexSet> find_expansion_copy(const HoffmanSignedGraph& h, const SignedGraph& g,
                                             int p, std::uint64_t budget) {
    SignedGraph pattern = expand(h, p);
    PatternFamily fam;
    fam.name = "expansion";
    fam.patterns = {pattern};
    if (auto hit = find_pattern(g, fam, budget)) return hit->vertices;
    return std::nullopt;
}

}  // namespace sg
