#pragma once

#include <map>

#include "lahkit/polymatrix.hpp"
#include "lahkit/weightspec.hpp"

namespace lahkit {

// Integer partition: weakly decreasing positive parts.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int size() const; // sum of parts
    int length() const { return static_cast<int>(parts.size()); }

    // Concatenated part digits, matching the table subscript style: "2111".
    // The empty partition renders as "0" only in contexts that need a name;
    // here it is "".
    std::string digits() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;
};

// Order used when listing a monomial-basis expansion: fewer parts first,
// then lexicographic ascending.  This is the layout of the reference
// tables.
struct TableOrder {
    bool operator()(const Partition& a, const Partition& b) const;
};

// Expansion of a symmetric polynomial in the monomial symmetric functions:
// sum over lambda |- degree of coeff(lambda) m_lambda.
struct MBasisExpr {
    int degree = 0;
    std::map<Partition, Scalar, TableOrder> coeffs;

    friend bool operator==(const MBasisExpr&, const MBasisExpr&) = default;
    std::string to_string() const; // "3m2 + 4m11" style
};

// m_lambda(x_1..x_r): sum of all distinct monomials with exponent multiset
// lambda.
MPoly monomial_sym(const Partition& lambda, int r);

// sym_spec: e_i / h_i live in weightspec.hpp (elementary_sym,
// homogeneous_sym).

// Expand a symmetric homogeneous polynomial of the given degree in
// x_1..x_r.  Requires r >= degree so that all partitions of the degree are
// distinguishable.  Throws not_symmetric (with a witness in the message)
// when p is not symmetric, domain_error on degree mismatch.
MBasisExpr to_monomial_basis(const MPoly& p, int degree, int r);

enum class LahSign { Plus, Minus };

// Table of monomial-basis expansions of L_{n,k}(e) (plus) or L_{n,k}(h)
// (minus) for 0 <= k <= n <= n_max.
struct LahSymfunTable {
    int n_max = 0;
    LahSign sign = LahSign::Plus;
    // cell(n, k) for 1 <= k <= n; row 0 / column 0 are structurally 1 / 0.
    std::vector<std::vector<MBasisExpr>> cells;

    const MBasisExpr& at(int n, int k) const { return cells[n][k]; }
};

LahSymfunTable lah_symfun_table(int n_max, LahSign sign, int cap = 7);

} // namespace lahkit
