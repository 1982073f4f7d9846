#include "sg/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <stdexcept>
#include <utility>

namespace sg {

namespace {

std::string edge_str(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

VertexSet normalize_vertex_set(std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return vertices;
}

SignedGraph SignedGraph::build(int vertex_count, const std::vector<SignedEdge>& edges) {
    if (vertex_count < 0) throw std::invalid_argument("vertex count must be nonnegative");
    SignedGraph g;
    g.n_ = vertex_count;
    g.adj_.assign(static_cast<size_t>(vertex_count) * vertex_count, 0);
    g.degree_.assign(vertex_count, 0);
    g.edges_.reserve(edges.size());
    for (const SignedEdge& e : edges) {
        if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count)
            throw std::invalid_argument("edge endpoint out of range: " + edge_str(e.u, e.v));
        if (e.u == e.v)
            throw std::invalid_argument("self-loop not allowed: " + edge_str(e.u, e.v));
        int a = std::min(e.u, e.v), b = std::max(e.u, e.v);
        if (g.adj_[static_cast<size_t>(a) * vertex_count + b] != 0)
            throw std::invalid_argument("duplicate edge: " + edge_str(a, b));
        int8_t s = static_cast<int8_t>(e.sign);
        g.adj_[static_cast<size_t>(a) * vertex_count + b] = s;
        g.adj_[static_cast<size_t>(b) * vertex_count + a] = s;
        g.degree_[a]++;
        g.degree_[b]++;
        g.edges_.push_back({a, b, e.sign});
    }
    std::sort(g.edges_.begin(), g.edges_.end(), [](const SignedEdge& x, const SignedEdge& y) {
        return std::pair(x.u, x.v) < std::pair(y.u, y.v);
    });
    return g;
}

std::vector<int> SignedGraph::neighbors(int v) const {
    std::vector<int> out;
    out.reserve(degree_[v]);
    for (int u = 0; u < n_; ++u)
        if (sign_value(v, u) != 0) out.push_back(u);
    return out;
}

bool SignedGraph::same_underlying_graph(const SignedGraph& other) const {
    if (n_ != other.n_ || edges_.size() != other.edges_.size()) return false;
    for (size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].u != other.edges_[i].u || edges_[i].v != other.edges_[i].v) return false;
    return true;
}

bool SignedGraph::operator==(const SignedGraph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
}

SignedGraph standard_family(FamilyKind kind, int t) {
    if (t < 1) throw std::invalid_argument("family parameter t must be positive");
    std::vector<SignedEdge> edges;
    switch (kind) {
        case FamilyKind::complete_plus:
        case FamilyKind::complete_minus: {
            Sign s = kind == FamilyKind::complete_plus ? Sign::plus : Sign::minus;
            for (int u = 0; u < t; ++u)
                for (int v = u + 1; v < t; ++v) edges.push_back({u, v, s});
            return SignedGraph::build(t, edges);
        }
        case FamilyKind::star_plus: {
            for (int v = 1; v <= t; ++v) edges.push_back({0, v, Sign::plus});
            return SignedGraph::build(t + 1, edges);
        }
        case FamilyKind::ktilde_zero:
        case FamilyKind::ktilde_minus: {
            for (int u = 1; u <= 2 * t; ++u)
                for (int v = u + 1; v <= 2 * t; ++v) edges.push_back({u, v, Sign::plus});
            for (int v = 1; v <= t; ++v) edges.push_back({0, v, Sign::plus});
            if (kind == FamilyKind::ktilde_minus)
                for (int v = t + 1; v <= 2 * t; ++v) edges.push_back({0, v, Sign::minus});
            return SignedGraph::build(2 * t + 1, edges);
        }
    }
    throw std::invalid_argument("unknown family kind");
}

SignedGraph switched(const SignedGraph& g, const VertexSet& flipped) {
    std::vector<char> in_u(g.vertex_count(), 0);
    for (int v : flipped) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("switch set contains unknown vertex " + std::to_string(v));
        in_u[v] = 1;
    }
    std::vector<SignedEdge> edges = g.edges();
    for (SignedEdge& e : edges)
        if (in_u[e.u] != in_u[e.v]) e.sign = flipped_sign(e.sign);
    return SignedGraph::build(g.vertex_count(), edges);
}

SignedGraph induced_subgraph(const SignedGraph& g, const VertexSet& s) {
    VertexSet sorted = normalize_vertex_set(s);
    if (sorted.empty()) throw std::invalid_argument("induced subgraph needs a non-empty vertex set");
    std::vector<int> local(g.vertex_count(), -1);
    for (size_t i = 0; i < sorted.size(); ++i) {
        int v = sorted[i];
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("vertex set contains unknown vertex " + std::to_string(v));
        local[v] = static_cast<int>(i);
    }
    std::vector<SignedEdge> edges;
    for (const SignedEdge& e : g.edges())
        if (local[e.u] >= 0 && local[e.v] >= 0) edges.push_back({local[e.u], local[e.v], e.sign});
    return SignedGraph::build(static_cast<int>(sorted.size()), edges);
}

std::vector<VertexSet> connected_components(const SignedGraph& g) {
    std::vector<VertexSet> comps;
    std::vector<char> seen(g.vertex_count(), 0);
    for (int start = 0; start < g.vertex_count(); ++start) {
        if (seen[start]) continue;
        VertexSet comp;
        std::queue<int> q;
        q.push(start);
        seen[start] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.push_back(v);
            for (int u = 0; u < g.vertex_count(); ++u)
                if (!seen[u] && g.adjacent(v, u)) {
                    seen[u] = 1;
                    q.push(u);
                }
        }
        comps.push_back(normalize_vertex_set(std::move(comp)));
    }
    return comps;
}

bool is_connected(const SignedGraph& g) {
    return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

bool verify_switching_witness(const SignedGraph& g, const SignedGraph& h,
                              const SwitchingEquivalenceWitness& w) {
    if (g.vertex_count() != h.vertex_count()) return false;
    if (static_cast<int>(w.isomorphism.size()) != g.vertex_count()) return false;
    std::vector<char> hit(h.vertex_count(), 0);
    for (int img : w.isomorphism) {
        if (img < 0 || img >= h.vertex_count() || hit[img]) return false;
        hit[img] = 1;
    }
    std::vector<int> s(h.vertex_count(), 1);
    for (int v : w.switch_set) {
        if (v < 0 || v >= h.vertex_count()) return false;
        s[v] = -1;
    }
    size_t g_edges = g.edges().size();
    if (g_edges != h.edges().size()) return false;
    for (const SignedEdge& e : g.edges()) {
        int a = w.isomorphism[e.u], b = w.isomorphism[e.v];
        int expect = static_cast<int>(e.sign) * s[a] * s[b];
        if (h.sign_value(a, b) != expect) return false;
    }
    return true;
}

namespace {

// Union-find with sign parity and rollback; no path compression so that
// undo is a plain trail replay.
class ParityDsu {
public:
    explicit ParityDsu(int n) : parent_(n), rank_(n, 0), rel_(n, 0) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }

    int find(int x, int& parity) const {
        parity = 0;
        while (parent_[x] != x) {
            parity ^= rel_[x];
            x = parent_[x];
        }
        return x;
    }

    // parity: 0 if the two potentials must agree, 1 if they must differ.
    bool unite(int x, int y, int parity) {
        int px, py;
        int rx = find(x, px), ry = find(y, py);
        if (rx == ry) return ((px ^ py) == parity);
        if (rank_[rx] < rank_[ry]) {
            std::swap(rx, ry);
            std::swap(px, py);
        }
        trail_.push_back({ry, rank_[rx]});
        parent_[ry] = rx;
        rel_[ry] = static_cast<int8_t>(px ^ py ^ parity);
        if (rank_[rx] == rank_[ry]) rank_[rx]++;
        return true;
    }

    size_t checkpoint() const { return trail_.size(); }

    void rollback(size_t mark) {
        while (trail_.size() > mark) {
            auto [child, old_rank] = trail_.back();
            trail_.pop_back();
            rank_[parent_[child]] = old_rank;
            parent_[child] = child;
            rel_[child] = 0;
        }
    }

private:
    std::vector<int> parent_;
    std::vector<int> rank_;
    mutable std::vector<int8_t> rel_;
    std::vector<std::pair<int, int>> trail_;  // (reparented root, old rank of new parent)
};

// Backtracking search for an induced embedding of `pattern` into `host`
// whose sign pattern is switching-consistent (every cycle keeps its sign
// product). Sign constraints propagate through a parity DSU, so unbalanced
// partial maps are cut early.
class SwitchingEmbedder {
public:
    SwitchingEmbedder(const SignedGraph& host, const SignedGraph& pattern, std::uint64_t budget)
        : host_(host), pattern_(pattern), budget_(budget), dsu_(pattern.vertex_count()) {}

    // On success fills `map` (pattern vertex -> host vertex) and `potential`
    // (pattern vertex -> +-1 with pot(x)pot(y) = sigma_P(x,y)*sigma_H(mx,my)).
    bool run(std::vector<int>& map, std::vector<int>& potential) {
        int pn = pattern_.vertex_count();
        if (pn > host_.vertex_count()) return false;
        order_ = make_order();
        map_.assign(pn, -1);
        used_.assign(host_.vertex_count(), 0);
        if (!extend(0)) return false;
        map = map_;
        potential.assign(pn, 1);
        for (int p = 0; p < pn; ++p) {
            int parity;
            dsu_.find(p, parity);
            potential[p] = parity ? -1 : 1;
        }
        return true;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    // Pattern vertices ordered so that each one (after the first) touches as
    // many earlier ones as possible; keeps the induced checks selective.
    std::vector<int> make_order() const {
        int pn = pattern_.vertex_count();
        std::vector<int> order;
        std::vector<char> chosen(pn, 0);
        for (int step = 0; step < pn; ++step) {
            int best = -1, best_back = -1, best_deg = -1;
            for (int p = 0; p < pn; ++p) {
                if (chosen[p]) continue;
                int back = 0;
                for (int q : order)
                    if (pattern_.adjacent(p, q)) back++;
                if (back > best_back || (back == best_back && pattern_.degree(p) > best_deg)) {
                    best = p;
                    best_back = back;
                    best_deg = pattern_.degree(p);
                }
            }
            chosen[best] = 1;
            order.push_back(best);
        }
        return order;
    }

    bool extend(int depth) {
        if (depth == pattern_.vertex_count()) return true;
        int p = order_[depth];
        for (int cand = 0; cand < host_.vertex_count(); ++cand) {
            if (used_[cand] || host_.degree(cand) < pattern_.degree(p)) continue;
            if (budget_ && ++nodes_ > budget_)
                throw std::runtime_error("pattern search budget exhausted");
            bool ok = true;
            size_t mark = dsu_.checkpoint();
            for (int i = 0; i < depth && ok; ++i) {
                int q = order_[i];
                int sp = pattern_.sign_value(p, q);
                int sh = host_.sign_value(cand, map_[q]);
                if ((sp == 0) != (sh == 0)) {
                    ok = false;
                } else if (sp != 0) {
                    ok = dsu_.unite(p, q, sp * sh < 0 ? 1 : 0);
                }
            }
            if (ok) {
                map_[p] = cand;
                used_[cand] = 1;
                if (extend(depth + 1)) return true;
                map_[p] = -1;
                used_[cand] = 0;
            }
            dsu_.rollback(mark);
        }
        return false;
    }

    const SignedGraph& host_;
    const SignedGraph& pattern_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    ParityDsu dsu_;
    std::vector<int> order_;
    std::vector<int> map_;
    std::vector<char> used_;
};

// Same-underlying-graph test: the difference signing must be balanced,
// i.e. admit vertex potentials p with sigma(x,y)*tau(x,y) = p(x)p(y).
std::optional<VertexSet> balance_switch_set(const SignedGraph& g, const SignedGraph& h) {
    int n = g.vertex_count();
    std::vector<int> pot(n, 0);
    for (int start = 0; start < n; ++start) {
        if (pot[start] != 0) continue;
        pot[start] = 1;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u = 0; u < n; ++u) {
                int sg_ = g.sign_value(v, u);
                if (sg_ == 0) continue;
                int want = sg_ * h.sign_value(v, u) * pot[v];
                if (pot[u] == 0) {
                    pot[u] = want;
                    q.push(u);
                } else if (pot[u] != want) {
                    return std::nullopt;
                }
            }
        }
    }
    VertexSet u;
    for (int v = 0; v < n; ++v)
        if (pot[v] < 0) u.push_back(v);
    return u;
}

}  // namespace

std::optional<SwitchingEquivalenceWitness> switching_equivalent(const SignedGraph& g,
                                                                const SignedGraph& h) {
    if (g.vertex_count() != h.vertex_count() || g.edges().size() != h.edges().size())
        return std::nullopt;
    if (g.same_underlying_graph(h)) {
        if (auto u = balance_switch_set(g, h)) {
            SwitchingEquivalenceWitness w;
            w.isomorphism.resize(g.vertex_count());
            for (int v = 0; v < g.vertex_count(); ++v) w.isomorphism[v] = v;
            w.switch_set = *u;
            return w;
        }
        // A different isomorphism of the shared underlying graph may still work.
    }
    SwitchingEmbedder emb(h, g, 0);
    std::vector<int> map, potential;
    if (!emb.run(map, potential)) return std::nullopt;
    SwitchingEquivalenceWitness w;
    w.isomorphism = map;
    for (int p = 0; p < g.vertex_count(); ++p)
        if (potential[p] < 0) w.switch_set.push_back(map[p]);
    w.switch_set = normalize_vertex_set(w.switch_set);
    return w;
}

std::optional<PatternHit> find_pattern(const SignedGraph& g, const PatternFamily& family,
                                       std::uint64_t budget) {
    for (size_t i = 0; i < family.patterns.size(); ++i) {
        const SignedGraph& p = family.patterns[i];
        if (p.vertex_count() == 0) throw std::invalid_argument("empty pattern in family");
        if (p.vertex_count() > g.vertex_count()) continue;
        SwitchingEmbedder emb(g, p, budget);
        std::vector<int> map, potential;
        if (emb.run(map, potential)) {
            PatternHit hit;
            hit.pattern_index = static_cast<int>(i);
            hit.vertices = normalize_vertex_set(map);
            return hit;
        }
    }
    return std::nullopt;
}

PatternFamily ktilde_family(int m) {
    PatternFamily fam;
    fam.name = "ktilde_" + std::to_string(2 * m);
    fam.patterns = {standard_family(FamilyKind::ktilde_zero, m),
                    standard_family(FamilyKind::ktilde_minus, m)};
    return fam;
}

}  // namespace sg
