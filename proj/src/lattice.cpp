#include "sg/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace sg {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Expected inner product of two vertices under the norm-m table.
double table_entry(const HoffmanSignedGraph& h, int x, int y, int m) {
    if (x == y) return h.label(x) == VertexLabel::slim ? m : 1.0;
    return h.graph().sign_value(x, y);
}

long long snap_integer(double v, double tol, const char* what) {
    double r = std::round(v);
    if (std::abs(v - r) > tol)
        throw std::runtime_error(std::string(what) + " is not integral: " + std::to_string(v));
    return static_cast<long long>(r);
}

long long isqrt_floor(long long v) {
    if (v < 0) return -1;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

}  // namespace

long long fat_correction(const HoffmanSignedGraph& h, int x, int y) {
    if (x < 0 || x >= h.graph().vertex_count() || y < 0 || y >= h.graph().vertex_count())
        throw std::invalid_argument("vertex out of range");
    if (h.label(x) != VertexLabel::slim || h.label(y) != VertexLabel::slim)
        throw std::invalid_argument("fat correction is defined for slim vertices only");
    long long n = 0;
    for (int f : h.fat_vertices()) {
        int sx = h.graph().sign_value(x, f);
        int sy = h.graph().sign_value(y, f);
        if (sx != 0 && sy != 0) n += (sx == sy) ? 1 : -1;
    }
    return n;
}

Representation build_representation(const HoffmanSignedGraph& h, int m) {
    if (m < 1) throw std::invalid_argument("representation norm must be positive");
    double lmin = hoffman_smallest_eigenvalue(h);
    if (lmin < -static_cast<double>(m) - 1e-9)
        throw std::runtime_error("no representation of norm " + std::to_string(m) +
                                 ": smallest eigenvalue " + std::to_string(lmin));

    const std::vector<int>& slim = h.slim_vertices();
    const std::vector<int>& fat = h.fat_vertices();
    const int ns = static_cast<int>(slim.size());
    const int nf = static_cast<int>(fat.size());
    const int dim = ns + nf;

    IntMatrix s = special_matrix(h);
    SymmetricMatrix gram0(std::max(ns, 1));
    for (int i = 0; i < ns; ++i)
        for (int j = i; j < ns; ++j)
            gram0.set(i, j, static_cast<double>(s.at(i, j)) + (i == j ? m : 0));
    Matrix l = ns > 0 ? cholesky_psd(gram0) : Matrix(0, 0);

    Representation rep;
    rep.norm = m;
    std::vector<int> slim_index(h.graph().vertex_count(), -1);
    for (int i = 0; i < ns; ++i) slim_index[slim[i]] = i;
    std::vector<int> fat_index(h.graph().vertex_count(), -1);
    for (int j = 0; j < nf; ++j) fat_index[fat[j]] = j;

    for (int v = 0; v < h.graph().vertex_count(); ++v) {
        std::vector<double> vec(dim, 0.0);
        if (h.label(v) == VertexLabel::fat) {
            vec[ns + fat_index[v]] = 1.0;
        } else {
            int i = slim_index[v];
            for (int j = 0; j < ns; ++j) vec[j] = l.at(i, j);
            for (int j = 0; j < nf; ++j) vec[ns + j] = h.graph().sign_value(v, fat[j]);
        }
        rep.vertices.push_back(v);
        rep.vectors.push_back(std::move(vec));
    }

    for (size_t a = 0; a < rep.vertices.size(); ++a)
        for (size_t b = a; b < rep.vertices.size(); ++b) {
            double want = table_entry(h, rep.vertices[a], rep.vertices[b], m);
            if (std::abs(dot(rep.vectors[a], rep.vectors[b]) - want) > 1e-8)
                throw std::runtime_error("representation Gram check failed");
        }
    return rep;
}

ReducedRepresentation reduce_representation(const Representation& phi,
                                            const HoffmanSignedGraph& h) {
    if (phi.vertices.size() != static_cast<size_t>(h.graph().vertex_count()))
        throw std::invalid_argument("representation does not match the Hoffman graph");

    std::vector<const std::vector<double>*> fat_vecs;
    std::vector<size_t> slim_pos;
    for (size_t i = 0; i < phi.vertices.size(); ++i) {
        if (h.label(phi.vertices[i]) == VertexLabel::fat)
            fat_vecs.push_back(&phi.vectors[i]);
        else
            slim_pos.push_back(i);
    }

    ReducedRepresentation red;
    red.norm = phi.norm;
    const int ns = static_cast<int>(slim_pos.size());
    red.fat_corrections = IntMatrix(ns, ns);
    for (size_t i : slim_pos) {
        std::vector<double> v = phi.vectors[i];
        for (const auto* f : fat_vecs) {
            double c = dot(phi.vectors[i], *f);
            for (size_t k = 0; k < v.size(); ++k) v[k] -= c * (*f)[k];
        }
        for (const auto* f : fat_vecs)
            if (std::abs(dot(v, *f)) > 1e-8)
                throw std::runtime_error("reduced vector is not orthogonal to a fat vector");
        red.slim_vertices.push_back(phi.vertices[i]);
        red.vectors.push_back(std::move(v));
    }

    for (int a = 0; a < ns; ++a)
        for (int b = 0; b < ns; ++b) {
            int x = red.slim_vertices[a], y = red.slim_vertices[b];
            long long nf = fat_correction(h, x, y);
            red.fat_corrections.at(a, b) = nf;
            double want = (a == b ? phi.norm : h.graph().sign_value(x, y)) - static_cast<double>(nf);
            if (std::abs(dot(red.vectors[a], red.vectors[b]) - want) > 1e-8)
                throw std::runtime_error("reduced representation Gram check failed");
        }
    return red;
}

LatticeDescription lattice_from_hoffman(const HoffmanSignedGraph& h, int m, bool reduced) {
    Representation rep = build_representation(h, m);
    LatticeDescription lat;
    if (reduced) {
        ReducedRepresentation red = reduce_representation(rep, h);
        lat.generators = red.vectors;
    } else {
        lat.generators = rep.vectors;
    }
    const int k = static_cast<int>(lat.generators.size());
    lat.gram = IntMatrix(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            lat.gram.at(i, j) =
                snap_integer(dot(lat.generators[i], lat.generators[j]), 1e-6, "Gram entry");
    return lat;
}

MinimalNormResult lattice_minimal_norm(const LatticeDescription& lattice, long long radius) {
    if (radius < 1) throw std::invalid_argument("radius must be positive");
    const int k = lattice.gram.rows();
    if (k == 0) throw std::invalid_argument("lattice has no generators");

    Spectrum sp = eigenvalues(lattice.gram.to_symmetric());
    double lmin = sp.eigenvalues.front();
    if (lmin < -1e-9) throw std::invalid_argument("lattice Gram is indefinite");

    double box = std::pow(2.0 * static_cast<double>(radius) + 1.0, k);
    if (box > 2e7) throw std::invalid_argument("search box too large for exhaustive enumeration");

    std::vector<long long> c(k, -radius);
    long long best = -1;
    // Enumerate coefficient vectors; quotient the global sign by pinning the
    // first nonzero coefficient positive.
    bool done = false;
    while (!done) {
        int first_nonzero = -1;
        for (int i = 0; i < k; ++i)
            if (c[i] != 0) {
                first_nonzero = i;
                break;
            }
        if (first_nonzero >= 0 && c[first_nonzero] > 0) {
            long long q = 0;
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) q += c[i] * lattice.gram.at(i, j) * c[j];
            if (q > 0 && (best < 0 || q < best)) best = q;
        }
        int pos = k - 1;
        while (pos >= 0 && c[pos] == radius) c[pos--] = -radius;
        if (pos < 0)
            done = true;
        else
            c[pos]++;
    }
    if (best < 0) throw std::runtime_error("no nonzero lattice vector in the search box");

    MinimalNormResult out;
    out.value = best;
    if (lmin > 1e-9) {
        // Any vector of norm <= best has coefficient sup-norm at most
        // sqrt(best / lambda_min(Gram)).
        double bound = std::sqrt(static_cast<double>(best) / (lmin - 1e-9 > 0 ? lmin - 1e-9 : lmin));
        out.certified = static_cast<double>(radius) >= bound;
    }
    return out;
}

long long integer_shift(const SignedGraph& g) {
    double x = -smallest_eigenvalue(g);
    return static_cast<long long>(std::ceil(x - 1e-7));
}

namespace {

struct BudgetExhausted {};

// Column-by-column search for N with N^T N = target. Coordinates whose rows
// agree across all previously fixed columns are interchangeable; candidates
// are canonicalized to nonincreasing entries within each class, and rows
// untouched so far additionally to nonnegative entries.
class GramFactorSearch {
public:
    GramFactorSearch(const IntMatrix& target, int dim, std::uint64_t budget)
        : target_(target), n_(target.cols()), dim_(dim), budget_(budget),
          cols_(n_, std::vector<long long>(dim, 0)),
          suffix_(n_, std::vector<long long>(dim + 1, 0)), candidate_(dim, 0),
          prev_in_class_(n_, std::vector<int>(dim, -1)),
          active_(n_, std::vector<char>(dim, 0)) {}

    bool run() {
        try {
            return assign_column(0);
        } catch (const BudgetExhausted&) {
            exhausted_ = true;
            return false;
        }
    }

    bool budget_exhausted() const { return exhausted_; }
    std::uint64_t nodes() const { return nodes_; }
    const std::vector<std::vector<long long>>& columns() const { return cols_; }

private:
    bool assign_column(int j) {
        if (j == n_) return true;
        // Row classes from the prefix of fixed columns; kept per column so
        // that backtracking into an earlier column sees its own classes.
        std::map<std::vector<long long>, int> last_of_class;
        for (int r = 0; r < dim_; ++r) {
            std::vector<long long> sig(j);
            bool nonzero = false;
            for (int i = 0; i < j; ++i) {
                sig[i] = cols_[i][r];
                nonzero = nonzero || sig[i] != 0;
            }
            active_[j][r] = nonzero;
            auto it = last_of_class.find(sig);
            prev_in_class_[j][r] = it == last_of_class.end() ? -1 : it->second;
            last_of_class[sig] = r;
        }
        return place_entry(j, 0, target_.at(j, j));
    }

    bool place_entry(int j, int r, long long rem) {
        if (r == dim_) {
            if (rem != 0) return false;
            for (int i = 0; i < j; ++i) {
                long long d = 0;
                for (int t = 0; t < dim_; ++t) d += candidate_[t] * cols_[i][t];
                if (d != target_.at(i, j)) return false;
            }
            cols_[j] = candidate_;
            auto& suf = suffix_[j];
            suf[dim_] = 0;
            for (int t = dim_ - 1; t >= 0; --t) suf[t] = suf[t + 1] + candidate_[t] * candidate_[t];
            if (assign_column(j + 1)) return true;
            return false;
        }

        long long ub = isqrt_floor(rem);
        if (prev_in_class_[j][r] >= 0) ub = std::min(ub, candidate_[prev_in_class_[j][r]]);
        long long lb = active_[j][r] ? -isqrt_floor(rem) : 0;

        for (long long v = ub; v >= lb; --v) {
            if (++nodes_ > budget_) throw BudgetExhausted{};
            long long rem2 = rem - v * v;
            candidate_[r] = v;
            bool feasible = true;
            // Cauchy-Schwarz cut on every pending inner-product constraint.
            for (int i = 0; i < j && feasible; ++i) {
                long long partial = 0;
                for (int t = 0; t <= r; ++t) partial += candidate_[t] * cols_[i][t];
                long long gap = target_.at(i, j) - partial;
                if (gap * gap > rem2 * suffix_[i][r + 1]) feasible = false;
            }
            if (feasible && place_entry(j, r + 1, rem2)) return true;
        }
        candidate_[r] = 0;
        return false;
    }

    const IntMatrix& target_;
    int n_;
    int dim_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    std::vector<std::vector<long long>> cols_;
    std::vector<std::vector<long long>> suffix_;
    std::vector<long long> candidate_;
    std::vector<std::vector<int>> prev_in_class_;   // [column][row]
    std::vector<std::vector<char>> active_;         // [column][row]
};

IntMatrix integrability_target(const SignedGraph& g, long long s, long long k) {
    const int n = g.vertex_count();
    IntMatrix t(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            t.at(i, j) = s * (g.sign_value(i, j) + (i == j ? k : 0));
    return t;
}

}  // namespace

IntegrabilitySearchResult integrability_search(const SignedGraph& g, long long s, int max_dim,
                                               std::uint64_t budget) {
    if (s < 1) throw std::invalid_argument("s must be a positive integer");
    if (g.vertex_count() == 0) throw std::invalid_argument("graph must be non-empty");
    const int n = g.vertex_count();
    if (max_dim <= 0) max_dim = 2 * n;

    long long k = integer_shift(g);
    IntMatrix target = integrability_target(g, s, k);

    IntegrabilitySearchResult result;
    result.max_dim = max_dim;
    GramFactorSearch search(target, max_dim, budget);
    bool found = search.run();
    result.nodes_used = search.nodes();
    if (found) {
        int used_rows = 0;
        for (int r = 0; r < max_dim; ++r)
            for (int j = 0; j < n; ++j)
                if (search.columns()[j][r] != 0) {
                    used_rows = std::max(used_rows, r + 1);
                    break;
                }
        used_rows = std::max(used_rows, 1);
        IntegrabilityCertificate cert;
        cert.s = s;
        cert.shift = k;
        cert.n_matrix = IntMatrix(used_rows, n);
        for (int r = 0; r < used_rows; ++r)
            for (int j = 0; j < n; ++j) cert.n_matrix.at(r, j) = search.columns()[j][r];
        if (!verify_certificate(cert, g))
            throw std::logic_error("internal error: search produced an invalid certificate");
        result.status = SearchStatus::found;
        result.certificate = std::move(cert);
    } else if (search.budget_exhausted()) {
        result.status = SearchStatus::undecided;
    } else {
        result.status = SearchStatus::impossible;
    }
    return result;
}

bool verify_certificate(const IntegrabilityCertificate& cert, const SignedGraph& g) {
    if (cert.s < 1) throw std::invalid_argument("certificate has non-positive s");
    const int n = g.vertex_count();
    if (cert.n_matrix.cols() != n)
        throw std::invalid_argument("certificate dimensions do not match the graph");
    long long k = integer_shift(g);
    if (cert.shift != k) return false;
    IntMatrix target = integrability_target(g, cert.s, k);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long long v = 0;
            for (int r = 0; r < cert.n_matrix.rows(); ++r)
                v += cert.n_matrix.at(r, i) * cert.n_matrix.at(r, j);
            if (v != target.at(i, j)) return false;
        }
    return true;
}

}  // namespace sg
