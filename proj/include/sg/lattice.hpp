#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sg/core.hpp"
#include "sg/hoffman.hpp"
#include "sg/spectra.hpp"

namespace sg {

/// Signed count of common fat neighbors of two slim vertices:
/// (pairs with equal edge signs) - (pairs with unequal signs).
/// For x == y this is the number of fat neighbors of x.
long long fat_correction(const HoffmanSignedGraph& h, int x, int y);

/// Vectors realizing the norm-m inner-product table: m on the slim diagonal,
/// 1 on the fat diagonal, +-1 on signed edges, 0 otherwise.
struct Representation {
    std::vector<int> vertices;                 // all vertices of h
    std::vector<std::vector<double>> vectors;  // parallel to vertices
    int norm = 1;
};

/// Exists iff lambda_min(h) >= -m; built from the Cholesky factor of
/// S(h) + mI plus unit coordinates for fat vertices. Throws when no
/// representation of the requested norm exists.
Representation build_representation(const HoffmanSignedGraph& h, int m);

struct ReducedRepresentation {
    std::vector<int> slim_vertices;
    std::vector<std::vector<double>> vectors;  // parallel to slim_vertices
    int norm = 1;
    IntMatrix fat_corrections;  // n^f over slim pairs
};

/// Projection of the slim vectors orthogonal to the fat unit vectors; the
/// resulting Gram follows the reduced table (m - n^f on the diagonal,
/// +-1 - n^f on edges, -n^f otherwise).
ReducedRepresentation reduce_representation(const Representation& phi,
                                            const HoffmanSignedGraph& h);

struct LatticeDescription {
    std::vector<std::vector<double>> generators;
    IntMatrix gram;
};

/// Lattice generated by the (reduced) representation image; the Gram matrix
/// is asserted integral (snapped within 1e-6).
LatticeDescription lattice_from_hoffman(const HoffmanSignedGraph& h, int m, bool reduced);

struct MinimalNormResult {
    long long value = 0;
    /// True when the coefficient box provably contains a minimal vector
    /// (positive-definite Gram and radius at least the covering bound);
    /// otherwise the value is only box-limited.
    bool certified = false;
};

/// Minimum norm over nonzero lattice vectors with coefficients in
/// [-radius, radius]; zero-norm combinations are the zero vector of a PSD
/// lattice and are excluded.
MinimalNormResult lattice_minimal_norm(const LatticeDescription& lattice, long long radius);

/// ceil(-lambda_min) with integer snapping at 1e-7, the shift used by the
/// integrability equation.
long long integer_shift(const SignedGraph& g);

struct IntegrabilityCertificate {
    long long s = 1;
    long long shift = 0;        // k = ceil(-lambda_min)
    IntMatrix n_matrix;         // N with N^T N = s(A + kI)
};

enum class SearchStatus { found, undecided, impossible };

struct IntegrabilitySearchResult {
    SearchStatus status = SearchStatus::undecided;
    std::optional<IntegrabilityCertificate> certificate;
    std::uint64_t nodes_used = 0;
    int max_dim = 0;
};

/// Depth-first search for an integer matrix N with N^T N = s(A + kI),
/// assigning one column per vertex; symmetry is cut by canonical column
/// ordering within interchangeable coordinate classes. `max_dim` caps the
/// number of rows (0 picks 2|V|); `budget` caps search nodes.
/// status == impossible is only reported after exhaustive completion at the
/// given max_dim.
IntegrabilitySearchResult integrability_search(const SignedGraph& g, long long s,
                                               int max_dim = 0,
                                               std::uint64_t budget = 10'000'000);

/// Exact integer re-check of N^T N = s(A + kI), independent of how the
/// certificate was produced. Throws on dimension mismatch.
bool verify_certificate(const IntegrabilityCertificate& cert, const SignedGraph& g);

}  // namespace sg
