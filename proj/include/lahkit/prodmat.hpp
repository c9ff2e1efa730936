#pragma once

#include <optional>

#include "lahkit/polymatrix.hpp"
#include "lahkit/weightspec.hpp"

namespace lahkit {

enum class ProdMatKind {
    Generic, // p_{ij} = (i!/(j-1)!) phi_{i-j+1}          (unrefined or refined)
    Ord,     // p_{ij} = j phi_{i-j+1}^{[j]}              (ordered forests)
    Refined, // p_{ij} = (i!/(j-1)!) phi_{i-j+1}^{[j]}
    Tilde,   // phi_0-normalized variant, 1 on the superdiagonal
};

// Lower-Hessenberg production matrix for the (refined) generic Lah triangle,
// truncated to size x size.  Column 0 is identically zero.
PolyMatrix build_production_matrix(const WeightSpec& w, ProdMatKind kind, int size);

// The triangle L_{n,k} for n,k <= n_max, produced by iterating the
// production matrix.  Uses the refined matrix when the weights are
// level-dependent.
PolyMatrix lah_triangle(int n_max, const WeightSpec& w);

// Row-generating polynomials L_n(phi, y) = sum_k L_{n,k} y^k of a
// lower-triangular triangle.
std::vector<MPoly> row_generating(const PolyMatrix& triangle);

// Checks B_y^{-1} P B_y = P (I + y Delta^T) entrywise on the size x size
// truncation with generic weights.  Returns the first offending cell on
// failure.
struct ConjugationReport {
    bool ok = true;
    int row = -1, col = -1;
    MPoly lhs, rhs;
};
ConjugationReport verify_conjugation(int size);

} // namespace lahkit
