#include "lahkit/polymatrix.hpp"

namespace lahkit {

PolyMatrix PolyMatrix::identity(int n) {
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = MPoly(1);
    return m;
}

PolyMatrix PolyMatrix::delta(int n) {
    PolyMatrix m(n, n);
    for (int i = 0; i + 1 < n; ++i) m.at(i, i + 1) = MPoly(1);
    return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw shape_error("PolyMatrix: size mismatch in product");
    PolyMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const MPoly& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const MPoly& b = o.at(k, j);
                if (!b.is_zero()) r.at(i, j) += a * b;
            }
        }
    return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw shape_error("PolyMatrix: size mismatch in sum");
    PolyMatrix r(rows_, cols_);
    for (int i = 0; i < rows_ * cols_; ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

PolyMatrix PolyMatrix::truncate(int rows, int cols) const {
    if (rows > rows_ || cols > cols_)
        throw shape_error("PolyMatrix::truncate: cannot enlarge");
    PolyMatrix r(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(i, j) = at(i, j);
    return r;
}

PolyMatrix PolyMatrix::drop_first_row_col() const {
    if (rows_ < 1 || cols_ < 1) throw shape_error("drop_first_row_col: empty matrix");
    PolyMatrix r(rows_ - 1, cols_ - 1);
    for (int i = 1; i < rows_; ++i)
        for (int j = 1; j < cols_; ++j) r.at(i - 1, j - 1) = at(i, j);
    return r;
}

bool PolyMatrix::is_lower_triangular() const {
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (!at(i, j).is_zero()) return false;
    return true;
}

bool PolyMatrix::is_lower_hessenberg() const {
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 2; j < cols_; ++j)
            if (!at(i, j).is_zero()) return false;
    return true;
}

PolyMatrix PolyMatrix::lower_triangular_inverse() const {
    if (rows_ != cols_) throw shape_error("lower_triangular_inverse: not square");
    if (!is_lower_triangular())
        throw shape_error("lower_triangular_inverse: not lower-triangular");
    int n = rows_;
    std::vector<Scalar> dinv(n);
    for (int i = 0; i < n; ++i) {
        Scalar d = at(i, i).as_scalar();
        if (d.is_zero())
            throw domain_error("lower_triangular_inverse: zero diagonal entry");
        dinv[i] = Scalar(1) / d;
    }
    PolyMatrix inv(n, n);
    for (int j = 0; j < n; ++j) {
        inv.at(j, j) = MPoly(dinv[j]);
        for (int i = j + 1; i < n; ++i) {
            MPoly s;
            for (int k = j; k < i; ++k) s += at(i, k) * inv.at(k, j);
            inv.at(i, j) = -s * dinv[i];
        }
    }
    return inv;
}

PolyMatrix output_matrix(const PolyMatrix& production, int n_rows) {
    const int p = production.rows();
    if (production.cols() != p) throw shape_error("output_matrix: production not square");
    PolyMatrix out(n_rows, p);
    if (n_rows == 0) return out;
    out.at(0, 0) = MPoly(1);
    for (int n = 1; n < n_rows; ++n) {
        if (!out.at(n - 1, p - 1).is_zero())
            throw truncation_too_small(
                "output_matrix: production truncation too small at row " +
                std::to_string(n));
        for (int i = 0; i < p; ++i) {
            const MPoly& a = out.at(n - 1, i);
            if (a.is_zero()) continue;
            for (int k = 0; k < p; ++k) {
                const MPoly& w = production.at(i, k);
                if (!w.is_zero()) out.at(n, k) += a * w;
            }
        }
    }
    return out;
}

std::vector<MPoly> output_column0(const PolyMatrix& production, int n) {
    PolyMatrix out = output_matrix(production, n);
    std::vector<MPoly> col(n);
    for (int i = 0; i < n; ++i) col[i] = out.at(i, 0);
    return col;
}

PolyMatrix output_matrix_of_transpose(const PolyMatrix& production, int n_rows) {
    const int p = production.rows();
    if (production.cols() != p)
        throw shape_error("output_matrix_of_transpose: production not square");
    PolyMatrix out(n_rows, p);
    PolyMatrix power = PolyMatrix::identity(p);
    for (int n = 0; n < n_rows; ++n) {
        if (n > 0) power = power * production;
        for (int k = 0; k < p; ++k) out.at(n, k) = power.at(k, 0);
    }
    return out;
}

PolyMatrix binomial_matrix(int size, const MPoly& v) {
    PolyMatrix b(size, size);
    for (int n = 0; n < size; ++n)
        for (int k = 0; k <= n; ++k)
            b.at(n, k) = Scalar(binomial(n, k)) * v.pow(n - k);
    return b;
}

PolyMatrix seq_matrix(const std::vector<MPoly>& seq, SeqMatrixKind kind, int size) {
    const size_t need = kind == SeqMatrixKind::Hankel
                            ? static_cast<size_t>(2 * size - 1)
                            : static_cast<size_t>(size);
    if (seq.size() < need)
        throw insufficient_sequence("seq_matrix: need " + std::to_string(need) +
                                    " entries, have " + std::to_string(seq.size()));
    PolyMatrix m(size, size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) {
            if (kind == SeqMatrixKind::Hankel)
                m.at(i, j) = seq[i + j];
            else if (i >= j)
                m.at(i, j) = seq[i - j];
        }
    return m;
}

} // namespace lahkit
