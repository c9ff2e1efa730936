#include "lahkit/prodmat.hpp"

namespace lahkit {

PolyMatrix build_production_matrix(const WeightSpec& w, ProdMatKind kind, int size) {
    if (size < 1) throw shape_error("build_production_matrix: size >= 1 required");
    PolyMatrix p(size, size);
    for (int i = 0; i < size; ++i) {
        for (int j = 1; j <= i + 1 && j < size; ++j) {
            switch (kind) {
                case ProdMatKind::Generic:
                    p.at(i, j) = Scalar(rising_product(j, i)) * w.phi(i - j + 1, j);
                    break;
                case ProdMatKind::Ord:
                    p.at(i, j) = Scalar(j) * w.phi(i - j + 1, j);
                    break;
                case ProdMatKind::Refined:
                    p.at(i, j) = Scalar(rising_product(j, i)) * w.phi(i - j + 1, j);
                    break;
                case ProdMatKind::Tilde: {
                    if (j == i + 1) {
                        p.at(i, j) = MPoly(1);
                    } else {
                        MPoly zeros(1);
                        for (int l = j + 1; l <= i; ++l) zeros *= w.phi(0, l);
                        p.at(i, j) =
                            Scalar(rising_product(j, i)) * zeros * w.phi(i - j + 1, j);
                    }
                    break;
                }
            }
        }
    }
    return p;
}

PolyMatrix lah_triangle(int n_max, const WeightSpec& w) {
    ProdMatKind kind =
        w.is_level_refined() ? ProdMatKind::Refined : ProdMatKind::Generic;
    PolyMatrix p = build_production_matrix(w, kind, n_max + 1);
    return output_matrix(p, n_max + 1);
}

std::vector<MPoly> row_generating(const PolyMatrix& triangle) {
    if (!triangle.is_lower_triangular())
        throw shape_error("row_generating: triangle must be lower-triangular");
    MPoly y(Var::y());
    std::vector<MPoly> rows(triangle.rows());
    for (int n = 0; n < triangle.rows(); ++n) {
        MPoly acc;
        MPoly ypow(1);
        for (int k = 0; k <= n && k < triangle.cols(); ++k) {
            acc += triangle.at(n, k) * ypow;
            ypow *= y;
        }
        rows[n] = acc;
    }
    return rows;
}

ConjugationReport verify_conjugation(int size) {
    // Work one size larger so the triple product is exact on the block.
    const int m = size + 1;
    PolyMatrix p = build_production_matrix(WeightSpec::generic(), ProdMatKind::Generic, m);
    MPoly y(Var::y());
    PolyMatrix by = binomial_matrix(m, MPoly(y));
    PolyMatrix byinv = binomial_matrix(m, -MPoly(y));
    PolyMatrix lhs = (byinv * p * by).truncate(size, size);

    // rhs_{ij} = p_{ij} + y p_{i,j+1}
    PolyMatrix rhs(size, size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) {
            rhs.at(i, j) = p.at(i, j);
            if (j + 1 < m) rhs.at(i, j) += y * p.at(i, j + 1);
        }

    ConjugationReport rep;
    for (int i = 0; i < size && rep.ok; ++i)
        for (int j = 0; j < size && rep.ok; ++j)
            if (lhs.at(i, j) != rhs.at(i, j)) {
                rep.ok = false;
                rep.row = i;
                rep.col = j;
                rep.lhs = lhs.at(i, j);
                rep.rhs = rhs.at(i, j);
            }
    return rep;
}

} // namespace lahkit
