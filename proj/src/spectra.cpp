#include "sg/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sg {

SymmetricMatrix::SymmetricMatrix(int order) : n_(order) {
    if (order < 1) throw std::invalid_argument("matrix order must be positive");
    a_.assign(static_cast<size_t>(order) * order, 0.0);
}

SymmetricMatrix SymmetricMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    int n = static_cast<int>(rows.size());
    SymmetricMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw std::invalid_argument("matrix rows must form a square");
        for (int j = 0; j < n; ++j) {
            if (!std::isfinite(rows[i][j]))
                throw std::invalid_argument("matrix entries must be finite");
            if (std::abs(rows[i][j] - rows[j][i]) > 0.0)
                throw std::invalid_argument("matrix must be symmetric");
            m.a_[static_cast<size_t>(i) * n + j] = rows[i][j];
        }
    }
    return m;
}

void SymmetricMatrix::set(int i, int j, double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("matrix entries must be finite");
    a_[static_cast<size_t>(i) * n_ + j] = v;
    a_[static_cast<size_t>(j) * n_ + i] = v;
}

double SymmetricMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

double SymmetricMatrix::max_abs() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::abs(v));
    return m;
}

double SymmetricMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : a_) s += v * v;
    return std::sqrt(s);
}

SymmetricMatrix adjacency_matrix(const SignedGraph& g) {
    SymmetricMatrix m(g.vertex_count());
    for (const SignedEdge& e : g.edges()) m.set(e.u, e.v, static_cast<double>(e.sign));
    return m;
}

namespace {

double offdiag_frobenius(const std::vector<double>& a, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double v = a[static_cast<size_t>(i) * n + j];
            s += 2.0 * v * v;
        }
    return std::sqrt(s);
}

}  // namespace

Spectrum eigenvalues(const SymmetricMatrix& m) {
    const int n = m.order();
    std::vector<double> a = m.data();
    for (double v : a)
        if (!std::isfinite(v)) throw std::invalid_argument("matrix entries must be finite");

    const double norm = m.frobenius_norm();
    const double target = 1e-12 * norm;
    const int max_sweeps = 64;

    auto idx = [n](int i, int j) { return static_cast<size_t>(i) * n + j; };

    for (int sweep = 0; sweep < max_sweeps && offdiag_frobenius(a, n) > target; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = a[idx(p, q)];
                if (apq == 0.0) continue;
                double app = a[idx(p, p)], aqq = a[idx(q, q)];
                double theta = (aqq - app) / (2.0 * apq);
                double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = a[idx(k, p)], akq = a[idx(k, q)];
                    a[idx(k, p)] = c * akp - s * akq;
                    a[idx(k, q)] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a[idx(p, k)], aqk = a[idx(q, k)];
                    a[idx(p, k)] = c * apk - s * aqk;
                    a[idx(q, k)] = s * apk + c * aqk;
                }
            }
        }
    }
    if (offdiag_frobenius(a, n) > target)
        throw std::runtime_error("Jacobi eigensolver failed to converge");

    Spectrum sp;
    sp.eigenvalues.resize(n);
    for (int i = 0; i < n; ++i) sp.eigenvalues[i] = a[idx(i, i)];
    std::sort(sp.eigenvalues.begin(), sp.eigenvalues.end());
    sp.tolerance = 1e-10 * (1.0 + norm);
    return sp;
}

double smallest_eigenvalue(const SignedGraph& g) {
    return eigenvalues(adjacency_matrix(g)).eigenvalues.front();
}

Matrix cholesky_psd(const SymmetricMatrix& m, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("cholesky tolerance must be positive");
    const int n = m.order();
    Matrix l(n, n);

    for (int j = 0; j < n; ++j) {
        double d = m.at(j, j);
        for (int k = 0; k < j; ++k) d -= l.at(j, k) * l.at(j, k);
        if (d < -tol)
            throw std::runtime_error("not positive semidefinite: pivot " + std::to_string(j) +
                                     " = " + std::to_string(d));
        if (d <= tol) continue;  // rank-deficient pivot: column stays zero
        double root = std::sqrt(d);
        l.at(j, j) = root;
        for (int i = j + 1; i < n; ++i) {
            double v = m.at(i, j);
            for (int k = 0; k < j; ++k) v -= l.at(i, k) * l.at(j, k);
            l.at(i, j) = v / root;
        }
    }

    double bound = 1e-8 * (1.0 + m.max_abs());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
            double v = 0.0;
            for (int k = 0; k <= j; ++k) v += l.at(i, k) * l.at(j, k);
            if (std::abs(v - m.at(i, j)) > bound)
                throw std::runtime_error("cholesky residual exceeds tolerance");
        }
    return l;
}

}  // namespace sg
