#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sg/cliques.hpp"
#include "sg/core.hpp"
#include "sg/spectra.hpp"

namespace sg {

enum class VertexLabel { slim, fat };

/// Integer matrix with exact arithmetic, used for special matrices, Gram
/// matrices of integral lattices, and integrability certificates.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
        a_.assign(static_cast<size_t>(rows) * cols, 0);
    }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    long long at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
    long long& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    SymmetricMatrix to_symmetric() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<long long> a_;
};

/// Signed graph with a slim/fat labeling. Fat vertices are pairwise
/// non-adjacent and never isolated.
class HoffmanSignedGraph {
public:
    static HoffmanSignedGraph build(SignedGraph graph, std::vector<VertexLabel> labels);

    const SignedGraph& graph() const { return graph_; }
    const std::vector<VertexLabel>& labels() const { return labels_; }
    VertexLabel label(int v) const { return labels_[v]; }
    const std::vector<int>& slim_vertices() const { return slim_; }
    const std::vector<int>& fat_vertices() const { return fat_; }

    /// True when every slim vertex has at least one fat neighbor.
    bool is_fat() const;

private:
    SignedGraph graph_;
    std::vector<VertexLabel> labels_;
    std::vector<int> slim_;
    std::vector<int> fat_;
};

/// S(h) = A_s - C C^T, indexed by slim vertices in increasing id order.
IntMatrix special_matrix(const HoffmanSignedGraph& h);

/// Eigenvalues of the special matrix.
Spectrum hoffman_eigenvalues(const HoffmanSignedGraph& h);
double hoffman_smallest_eigenvalue(const HoffmanSignedGraph& h);

/// Switch the underlying signed graph; labels are preserved.
HoffmanSignedGraph hoffman_switch(const HoffmanSignedGraph& h, const VertexSet& u);

/// Replace each fat vertex by an n-vertex positive clique; every former
/// neighbor of the fat vertex joins all n clique vertices with the old edge
/// sign. Result vertices: slim vertices first (original order), then the
/// clique blocks in fat-vertex order.
SignedGraph expand(const HoffmanSignedGraph& h, int n);

struct ConvergenceProbe {
    double limit = 0.0;  // smallest eigenvalue of h
    std::vector<std::pair<int, double>> table;  // (n, lambda_min(expand(h,n)))
};

ConvergenceProbe convergence_probe(const HoffmanSignedGraph& h, const std::vector<int>& n_values);

struct FatSource {
    int fat_vertex = -1;     // vertex id in the host Hoffman graph
    VertexSet clique;        // canonical representative clique
    NeighborhoodSplit split; // its m-neighborhood split
};

struct AssociatedHoffmanGraph {
    HoffmanSignedGraph host;  // slim part = the input graph, fat part appended
    std::vector<FatSource> fat_sources;
    int m = 2;
    int n = 1;
    std::vector<std::string> warnings;
};

/// Builds the associated Hoffman signed graph: one fat vertex per distinct
/// combined m-neighborhood over maximal positive cliques with >= n vertices,
/// attached positively to the plus side and negatively to the minus side.
/// With check_pattern_free the ktilde-switching-free precondition is
/// verified up front. n below 2(m^2+m) is allowed and recorded as a warning.
AssociatedHoffmanGraph associated_hoffman_graph(const SignedGraph& g, int m, int n,
                                                bool check_pattern_free = true);

/// Number of fat neighbors of each slim vertex (indexed by slim vertex id).
std::vector<int> fat_count_per_vertex(const AssociatedHoffmanGraph& assoc);

/// Searches g for an induced copy of expand(h, p); returns the vertex set of
/// the copy. Budget caps search nodes; exceeding it throws.
std::optional<VertexSet> find_expansion_copy(const HoffmanSignedGraph& h, const SignedGraph& g,
                                             int p, std::uint64_t budget = 20'000'000);

}  // namespace sg
