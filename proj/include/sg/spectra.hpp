#pragma once

#include <vector>

#include "sg/core.hpp"

namespace sg {

/// Dense symmetric matrix of doubles, row-major, order >= 1.
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(int order);
    static SymmetricMatrix from_rows(const std::vector<std::vector<double>>& rows);

    int order() const { return n_; }
    double at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    void set(int i, int j, double v);

    double trace() const;
    double max_abs() const;
    double frobenius_norm() const;
    const std::vector<double>& data() const { return a_; }

private:
    int n_;
    std::vector<double> a_;
};

/// Dense rectangular matrix of doubles, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
        a_.assign(static_cast<size_t>(rows) * cols, 0.0);
    }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    double at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
    double& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> a_;
};

struct Spectrum {
    std::vector<double> eigenvalues;  // nondecreasing
    double tolerance = 0.0;           // guaranteed accuracy of each eigenvalue
};

/// 0/+1/-1 adjacency matrix with zero diagonal.
SymmetricMatrix adjacency_matrix(const SignedGraph& g);

/// All eigenvalues by cyclic Jacobi rotations; each within
/// 1e-10*(1+||M||) of exact. Rejects non-finite entries.
Spectrum eigenvalues(const SymmetricMatrix& m);

double smallest_eigenvalue(const SignedGraph& g);

/// Cholesky factor of a positive-semidefinite matrix: lower-triangular
/// square L with ||L L^T - M||_max <= 1e-8*(1+||M||). Rank-deficient
/// pivots (|pivot| <= tol) produce zero columns; a pivot below -tol throws
/// with the pivot index.
Matrix cholesky_psd(const SymmetricMatrix& m, double tol = 1e-9);

}  // namespace sg
