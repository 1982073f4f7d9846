#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sg/core.hpp"

namespace sg {

/// Set of vertices inducing an all-positive clique in the host graph.
struct PositiveClique {
    VertexSet vertices;
};

struct CliqueCatalog {
    int n_min = 1;
    std::vector<PositiveClique> cliques;  // maximal, |vertices| >= n_min, sorted
};

/// Maximal cliques of the positive graph with at least n_min vertices
/// (Bron-Kerbosch with pivoting, filtered afterward).
CliqueCatalog maximal_positive_cliques(const SignedGraph& g, int n_min);

/// Partition induced by m-neighborhood counting against a clique C:
/// plus/minus hold the vertices with >= m positive/negative neighbors in C,
/// rest everything else. plus and minus overlap exactly when the host is
/// not ktilde-switching-free.
struct NeighborhoodSplit {
    VertexSet plus;
    VertexSet minus;
    VertexSet rest;
    int m = 1;

    bool disjoint() const;
    VertexSet overlap() const;  // plus intersect minus
    VertexSet combined() const; // plus union minus
};

NeighborhoodSplit m_neighborhoods(const SignedGraph& g, const PositiveClique& c, int m);

struct TrichotomyEntry {
    int vertex = -1;
    int case_id = 0;  // 1..3 per the trichotomy, 0 when violated
    int pos_in_clique = 0;
    int neg_in_clique = 0;
    int non_in_clique = 0;
    bool violation = false;
    std::string implied_pattern;  // "ktilde_zero" or "ktilde_minus" when violated
    VertexSet witness;            // vertex set inducing the implied pattern
};

struct TrichotomyReport {
    std::vector<TrichotomyEntry> entries;
    int violation_count = 0;
};

/// Classifies every vertex against the clique trichotomy and reports each
/// count-bound violation together with the ktilde pattern it implies.
/// Requires |V(C)| >= 3m-2.
TrichotomyReport trichotomy_check(const SignedGraph& g, const PositiveClique& c, int m);

enum class CliqueRelation { separated, same_neighborhood };

struct CliqueRelationEvidence {
    CliqueRelation relation = CliqueRelation::separated;
    int other_in_plus = 0;       // |V(C') ∩ plus(C)|
    int other_in_minus = 0;      // |V(C') ∩ minus(C)|
    int max_rest_neighbors = 0;  // max neighbors in C over remaining C' vertices
    bool unions_equal = false;
};

/// Decides which side of the two-clique dichotomy holds for C, C' (both of
/// size >= 2(m^2+m) in a host assumed ktilde-switching-free). Throws a
/// "lemma violation" error carrying the counts when neither side holds.
CliqueRelationEvidence clique_relation(const SignedGraph& g, const PositiveClique& c,
                                       const PositiveClique& c_prime, int m);

/// Induced subgraph on plus ∪ minus, switched on the minus side.
struct QuasiPositiveClique {
    VertexSet vertices;    // plus ∪ minus, host ids
    SignedGraph graph;     // induced and switched, local ids follow sorted vertices
    VertexSet switch_set;  // the minus side, host ids
};

QuasiPositiveClique quasi_positive_clique(const SignedGraph& g, const PositiveClique& c, int m);

/// Smallest t such that the positive graph of g is a t-plex:
/// 1 + max over vertices of the number of positive-graph non-neighbors.
int plex_degree(const SignedGraph& g);

}  // namespace sg
