#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sg {

/// Edge sign. Multiplication follows the usual rule: equal signs give plus.
enum class Sign : int { plus = 1, minus = -1 };

inline Sign operator*(Sign a, Sign b) {
    return static_cast<int>(a) == static_cast<int>(b) ? Sign::plus : Sign::minus;
}
inline Sign flipped_sign(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

struct SignedEdge {
    int u = 0;
    int v = 0;
    Sign sign = Sign::plus;
};

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<int>;

VertexSet normalize_vertex_set(std::vector<int> vertices);

/// A simple graph with +/- signed edges. Vertices are dense 0-based ids.
/// Values are immutable after construction; every operation returns a new graph.
class SignedGraph {
public:
    SignedGraph() = default;

    /// Validates the edge list: endpoints in range, no self-loops, no
    /// duplicate pair (regardless of sign). Throws std::invalid_argument
    /// naming the offending edge.
    static SignedGraph build(int vertex_count, const std::vector<SignedEdge>& edges);

    int vertex_count() const { return n_; }
    const std::vector<SignedEdge>& edges() const { return edges_; }

    /// +1, -1 for a signed edge, 0 for a non-edge (or u == v).
    int sign_value(int u, int v) const { return adj_[static_cast<size_t>(u) * n_ + v]; }
    bool adjacent(int u, int v) const { return sign_value(u, v) != 0; }
    int degree(int v) const { return degree_[v]; }
    std::vector<int> neighbors(int v) const;

    bool same_underlying_graph(const SignedGraph& other) const;
    bool operator==(const SignedGraph& other) const;

private:
    int n_ = 0;
    std::vector<SignedEdge> edges_;   // normalized u < v, lexicographically sorted
    std::vector<int8_t> adj_;         // n*n sign values
    std::vector<int> degree_;
};

enum class FamilyKind { complete_plus, complete_minus, star_plus, ktilde_zero, ktilde_minus };

/// Named parameterized graphs.
///   complete_plus/minus t: (K_t,+) / (K_t,-) on t vertices.
///   star_plus t: (K_{1,t},+), center 0, leaves 1..t.
///   ktilde_zero/minus t: 2t+1 vertices, positive clique on 1..2t, apex 0
///   positive to 1..t, and (minus variant) negative to t+1..2t.
SignedGraph standard_family(FamilyKind kind, int t);

/// Flip the sign of every edge with exactly one endpoint in `flipped`.
SignedGraph switched(const SignedGraph& g, const VertexSet& flipped);

/// Subgraph induced on a non-empty vertex set S; vertices are renumbered
/// 0..|S|-1 following the sorted order of S.
SignedGraph induced_subgraph(const SignedGraph& g, const VertexSet& s);

bool is_connected(const SignedGraph& g);
std::vector<VertexSet> connected_components(const SignedGraph& g);

/// Witness that H, after relabeling by `isomorphism` and switching on
/// `switch_set`, carries the same signing as G:
/// tau({iso[x],iso[y]}) = sigma({x,y}) * s(iso[x]) * s(iso[y]) on every edge,
/// where s(v) = -1 exactly on switch_set.
struct SwitchingEquivalenceWitness {
    std::vector<int> isomorphism;  // vertex of G -> vertex of H
    VertexSet switch_set;          // subset of V(H)
};

bool verify_switching_witness(const SignedGraph& g, const SignedGraph& h,
                              const SwitchingEquivalenceWitness& w);

/// Decides switching equivalence. Same-underlying-graph pairs use the
/// fundamental-cycle sign test (linear); otherwise a backtracking
/// isomorphism search over underlying graphs with sign-parity propagation.
std::optional<SwitchingEquivalenceWitness> switching_equivalent(const SignedGraph& g,
                                                                const SignedGraph& h);

struct PatternFamily {
    std::string name;
    std::vector<SignedGraph> patterns;  // each non-empty
};

struct PatternHit {
    int pattern_index = -1;
    VertexSet vertices;  // vertex set in the host graph
};

/// First induced subgraph of `g` switching equivalent to any family member,
/// or nullopt if `g` is pattern-free. `budget` caps search nodes (0 = none);
/// exceeding it throws std::runtime_error.
std::optional<PatternHit> find_pattern(const SignedGraph& g, const PatternFamily& family,
                                       std::uint64_t budget = 0);

inline bool is_pattern_free(const SignedGraph& g, const PatternFamily& family) {
    return !find_pattern(g, family).has_value();
}

/// Pattern family {ktilde_zero(m), ktilde_minus(m)} used by every
/// switching-free precondition in the clique and structure machinery.
PatternFamily ktilde_family(int m);

}  // namespace sg
