#pragma once

#include <vector>

#include "lahkit/mpoly.hpp"

namespace lahkit {

// Dense finite matrix of exact polynomials.  Always a truncation of an
// infinite matrix; enlarging the truncation never changes entries already
// computed.
class PolyMatrix {
public:
    PolyMatrix() : rows_(0), cols_(0) {}
    PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    MPoly& at(int i, int j) { return data_[i * cols_ + j]; }
    const MPoly& at(int i, int j) const { return data_[i * cols_ + j]; }

    static PolyMatrix identity(int n);
    // Superdiagonal shift: delta(i, i+1) = 1.
    static PolyMatrix delta(int n);

    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix transpose() const;
    // Top-left block.
    PolyMatrix truncate(int rows, int cols) const;
    // Remove the zeroth row and column (the "hat" submatrix).
    PolyMatrix drop_first_row_col() const;

    bool is_lower_triangular() const;
    bool is_lower_hessenberg() const;

    // Inverse of a lower-triangular matrix whose diagonal entries are
    // invertible scalars (forward substitution).
    PolyMatrix lower_triangular_inverse() const;

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

private:
    int rows_, cols_;
    std::vector<MPoly> data_;
};

// Output matrix of a production matrix: n_rows rows of a_{nk} = (P^n)_{0k},
// computed by the transfer recurrence a_{nk} = sum_i a_{n-1,i} p_{ik}.
// Throws truncation_too_small when mass reaches the last column of the
// truncation before the final row (the step out of that column is unknown).
PolyMatrix output_matrix(const PolyMatrix& production, int n_rows);

// Column 0 of the output matrix, n entries: (P^j)_{00} for j < n.
std::vector<MPoly> output_column0(const PolyMatrix& production, int n);

// Output matrix of the transpose: O(P^T)_{nk} = (P^n)_{k0}, computed from
// powers of the truncated P.  For a lower-Hessenberg P the entry (n, k) is
// exact whenever n + k < the truncation size.
PolyMatrix output_matrix_of_transpose(const PolyMatrix& production, int n_rows);

// (B_v)_{nk} = C(n,k) v^{n-k} for an arbitrary polynomial v.
PolyMatrix binomial_matrix(int size, const MPoly& v);
inline PolyMatrix binomial_matrix(int size) {
    return binomial_matrix(size, MPoly(Var::y()));
}

enum class SeqMatrixKind { Hankel, Toeplitz };

// Hankel (a_{i+j}) or Toeplitz (a_{i-j}, zero for negative index) truncation
// of a sequence.  Hankel needs 2*size-1 entries, Toeplitz needs size.
PolyMatrix seq_matrix(const std::vector<MPoly>& seq, SeqMatrixKind kind, int size);

} // namespace lahkit
