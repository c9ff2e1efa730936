#pragma once

#include <optional>

#include "lahkit/polymatrix.hpp"

namespace lahkit {

// Exact determinant of the square submatrix selected by rows/cols.
// Fraction-free Bareiss elimination; for sizes <= 4 a cofactor expansion is
// run as an independent cross-check and the two must agree.
MPoly minor_det(const PolyMatrix& m, const std::vector<int>& rows,
                const std::vector<int>& cols);

// Determinant of the whole (square) matrix by each route; exposed so tests
// can compare them on random inputs.
MPoly det_bareiss(const PolyMatrix& m);
MPoly det_cofactor(const PolyMatrix& m);

struct TPWitness {
    std::vector<int> rows, cols;
    Monomial monomial;
    Scalar coeff;
    MPoly minor_value;
};

struct TPReport {
    int order = 0;
    bool pass = true;
    std::optional<TPWitness> witness;
    // number of minors left unevaluated when a budget stopped the scan
    long remaining = 0;
};

// Checks all minors of size <= r for coefficientwise nonnegativity.  Minors
// are scanned by size ascending, then lexicographic row/column sets; the
// reported witness is the first failure in that canonical order regardless
// of the number of jobs.  max_minors < 0 means unbounded.
TPReport tp_check(const PolyMatrix& m, int r, int jobs = 1, long max_minors = -1);

// Builds the Hankel/Toeplitz truncation of seq and delegates to tp_check.
TPReport seq_tp_check(const std::vector<MPoly>& seq, SeqMatrixKind kind, int r,
                      int size, int jobs = 1);

// b_{ij} = d_{j+1} d_{j+2} ... d_i * a_{ij} for a lower-triangular a.
PolyMatrix diag_rescale(const PolyMatrix& m, const std::vector<MPoly>& d);

} // namespace lahkit
