#pragma once

#include <cstdint>
#include <optional>

#include "lahkit/polymatrix.hpp"
#include "lahkit/pseries.hpp"

namespace lahkit {

// Coefficient sequence for m-branched S-fractions.  Index 0-based; the
// entries below index m are never touched by path enumeration (the
// Euler-Gauss variant keeps r leading zeros there).  Rule-based and total:
// at(i) is defined for every i >= 0.
class AlphaSeq {
public:
    enum class Kind { Generic, LahPattern, Values };

    // alpha_i = the symbol alpha_i.
    static AlphaSeq generic(int m);
    // The pattern with r leading zeros then y, x_1..x_r, y, 2x_1..2x_r, ...:
    // alpha_i = floor(i/(r+1)) x_{j+1} when i = j mod r+1 with j <= r-1,
    // alpha_i = y when i = r mod r+1.  Optionally with x_1..x_r permuted.
    static AlphaSeq lah(int r);
    static AlphaSeq lah_permuted(int r, const std::vector<int>& perm);
    // Explicit values, zero past the end; m is the branch order they serve.
    static AlphaSeq values(int m, std::vector<MPoly> vals);
    static AlphaSeq constant(int m, const MPoly& v, int length);

    MPoly at(int i) const;
    int m() const { return m_; }

private:
    AlphaSeq(Kind k, int m) : kind_(k), m_(m) {}
    Kind kind_;
    int m_;
    std::vector<int> perm_;
    std::vector<MPoly> vals_;
};

inline AlphaSeq alpha_lah(int r) { return AlphaSeq::lah(r); }

// An m-Dyck path: steps +1 (rise) and -m (m-fall), heights never below the
// start level; the length of a closed path is a multiple of m+1.
struct MDyckPath {
    int m = 1;
    int start_level = 0;          // (m+1)k offset for generalized paths
    std::vector<bool> rises;      // true = rise, false = m-fall
    void validate() const;        // throws invalid_path
    MPoly weight(const AlphaSeq& alpha) const;
};

// Visit every m-Dyck path of length (m+1)n from height 0 back to height 0.
void enumerate_mdyck_paths(int m, int n,
                           const std::function<void(const MDyckPath&)>& visit,
                           int length_cap = 16);

// m-Stieltjes-Rogers polynomial of order n: weight sum over m-Dyck paths of
// length (m+1)n, each m-fall from height i weighted alpha_i.  Computed by
// height-indexed transfer DP.
MPoly sr_poly(int m, int n, const AlphaSeq& alpha, int length_cap = 40);

// Generalized version: partial m-Dyck paths from (0,0) to ((m+1)n, (m+1)k).
MPoly sr_poly_general(int m, int n, int k, const AlphaSeq& alpha, int length_cap = 40);

// Literal path-list enumeration of sr_poly, usable as its own oracle for
// small n.
MPoly sr_poly_enumerate(int m, int n, const AlphaSeq& alpha, int length_cap = 16);

// Production matrix of the S^{(m)} triangle: the product of m lower
// bidiagonal factors L and one upper bidiagonal factor U*.
PolyMatrix sfrac_production_matrix(int m, const AlphaSeq& alpha, int size);

// Verifies f_k(t) = 1 + alpha_{k+m} t f_k(t) f_{k+1}(t) ... f_{k+m}(t)
// through order N for 0 <= k <= k_max, with the f_k built from path
// enumeration.  Returns the first failing (k, order) if any.  When
// equation_alpha is given, the right-hand side uses those coefficients
// instead (a mutated sequence must fail at the first order touching the
// mutated index).
struct FunctionalCheck {
    bool ok = true;
    int k = -1;
    int order = -1;
};
FunctionalCheck series_functional_check(int m, const AlphaSeq& alpha, int k_max, int N,
                                        const AlphaSeq* equation_alpha = nullptr);

// Generating function f_k of m-Dyck paths at level k, to order N.
PSeries level_series(int m, int k, const AlphaSeq& alpha, int N);

// Euler-Gauss coefficient g_{k,n} for the Lah alpha pattern of order r:
// g_{k,n} = (Dt_r + sum_{i=1..r} alpha_{k+i}) g_{k,n-1} + g_{k-r,n},
// with g_{k,n} = delta_{n0} for k < 0.
MPoly euler_gauss_g(int r, int k, int n);

} // namespace lahkit
