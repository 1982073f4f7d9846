#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sg/cliques.hpp"
#include "sg/core.hpp"
#include "sg/hoffman.hpp"

namespace sg {

struct KappaInputs {
    std::map<std::string, long long> kappa;   // "kappa0".."kappa4"
    std::map<std::string, long long> ramsey;  // "m,s,t" -> R(m,s,t) value or bound
    std::optional<long long> residual_valency_bound;
};

struct DecompositionParams {
    int m = 2;
    int n = 1;
    std::optional<double> lambda;  // <= -1 when present; enables bound checks
    std::optional<KappaInputs> kappa_inputs;
};

struct DecompositionPiece {
    VertexSet vertices;   // combined m-neighborhood of the canonical clique
    SignedGraph graph;    // induced subgraph of the host on `vertices`
    VertexSet plus;
    VertexSet minus;
    VertexSet clique;     // canonical representative clique
    int fat_vertex = -1;  // id in the associated Hoffman graph
};

struct Decomposition {
    std::vector<DecompositionPiece> pieces;
    SignedGraph residual;  // host vertices, edges outside every piece
    DecompositionParams params;
    std::vector<std::string> warnings;
};

/// Pieces induced on the neighbors of each fat vertex of the associated
/// Hoffman graph, plus the residual graph. Requires the host to be
/// ktilde-switching-free for this m (checked unless `force`).
Decomposition decompose(const SignedGraph& g, const DecompositionParams& params,
                        bool force = false);

struct BoundCheck {
    std::string name;
    double bound = 0.0;
    double value = 0.0;
    bool satisfied = false;
};

struct DecompositionReport {
    int max_membership = 0;
    int min_membership = 0;
    std::vector<int> plex_degrees;       // per piece, of the switched piece
    int max_pairwise_intersection = 0;
    int residual_max_valency = 0;
    std::vector<int> uncovered_vertices; // coverage gap, expected empty above threshold
    std::vector<std::string> integrity_issues;
    std::vector<BoundCheck> bounds_checked;
};

/// Recomputes every number of the report from the raw pieces; violations and
/// irrecomputable pieces are reported, never thrown.
DecompositionReport verify_decomposition(const SignedGraph& g, const Decomposition& d);

/// Certified eigenvalue lower bound lambda(t) for a given kappa:
/// -t(t-1)(t-2)k/2 - 2tk + k + t - 1.
double lower_bound_from_kappa(long long t, long long kappa);

/// The Hoffman signed graph families whose expansions are forbidden above
/// the decomposition thresholds. Every member has smallest eigenvalue
/// strictly below lambda (checked numerically on construction).
struct SigmaFamilies {
    HoffmanSignedGraph h0;               // 1 slim, floor(-lambda)+1 fat, all positive
    std::vector<HoffmanSignedGraph> f1;  // 1 fat over slim vertices, one slim
                                         // non-positively adjacent to the rest
    std::vector<HoffmanSignedGraph> f2;  // 2 fat over floor(-lambda) slim
};

SigmaFamilies sigma_families(double lambda);

struct CatalogEntry {
    IntMatrix matrix;        // special matrix of a minimal forbidden graph
    std::string provenance;  // which case of the catalog the entry realizes
    double lambda_min = 0.0;
};

struct ForbiddenCatalog {
    std::vector<CatalogEntry> entries;
};

/// The finite catalog of special matrices of minimal forbidden fat Hoffman
/// signed graphs for eigenvalue -2; every entry has lambda_min <= -1-sqrt(2).
ForbiddenCatalog catalog_f_minus2();

struct ForbiddenWitness {
    VertexSet slim;
    VertexSet fat;
    int catalog_index = -1;
};

/// Searches induced fat Hoffman subgraphs with <= 3 slim and <= 4 fat
/// vertices whose special matrix matches a catalog entry up to slim
/// permutation and +-1 diagonal conjugation. Requires h fat.
std::optional<ForbiddenWitness> contains_minimal_forbidden(const HoffmanSignedGraph& h);

enum class SmallClass { positive_clique_class, contains_sqrt2_obstruction };

struct SmallClassification {
    SmallClass cls = SmallClass::positive_clique_class;
    VertexSet switch_set;          // switching onto an all-positive clique
    VertexSet obstruction;         // induced subgraph witnessing the obstruction
    std::string obstruction_kind;  // "complete_minus_3" or "star_plus_2"
};

/// Connected graphs only: either switching-equivalent to a positive clique
/// (with the switching set) or exhibits an induced subgraph switching
/// equivalent to (K_3,-) or (K_{1,2},+).
SmallClassification classify_small(const SignedGraph& g);

}  // namespace sg
