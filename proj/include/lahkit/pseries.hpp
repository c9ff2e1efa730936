#pragma once

#include <vector>

#include "lahkit/mpoly.hpp"

namespace lahkit {

// Truncated formal power series in t with MPoly coefficients, exact up to
// and including order N.  The egf flag records whether coefficient n stores
// [t^n] (false) or n! [t^n] (true); all arithmetic below works on the
// ordinary-coefficient form.
class PSeries {
public:
    PSeries() = default;
    explicit PSeries(int order) : coeffs_(order + 1) {}
    PSeries(std::vector<MPoly> coeffs, bool egf = false)
        : coeffs_(std::move(coeffs)), egf_(egf) {}

    static PSeries one(int order);
    static PSeries t_var(int order); // the series t

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool egf() const { return egf_; }
    const MPoly& coeff(int n) const { return coeffs_[n]; }
    MPoly& coeff(int n) { return coeffs_[n]; }
    const std::vector<MPoly>& coeffs() const { return coeffs_; }

    // Exact conversions between coefficient conventions.
    PSeries to_ogf() const;
    PSeries to_egf() const;

    PSeries truncated(int order) const;

    PSeries operator+(const PSeries& o) const;
    PSeries operator-(const PSeries& o) const;
    PSeries operator*(const PSeries& o) const;
    PSeries operator*(const MPoly& c) const;

    // 1/this; requires an invertible scalar constant term.
    PSeries reciprocal() const;
    // this(g); requires g(0) = 0.
    PSeries compose(const PSeries& g) const;
    // Compositional inverse by Lagrange inversion; requires zero constant
    // term and invertible linear coefficient.
    PSeries compositional_inverse() const;

    PSeries derivative() const;
    PSeries integrate() const; // antiderivative with zero constant term

    friend bool operator==(const PSeries& a, const PSeries& b) {
        return a.coeffs_ == b.coeffs_ && a.egf_ == b.egf_;
    }

private:
    std::vector<MPoly> coeffs_;
    bool egf_ = false;
};

// Unique solution of U'(t) = A(U(t)), U(0) = 0, to the given order.
PSeries ode_solve_autonomous(const PSeries& a, int order);

// exp(s) for a series with zero constant term (via f' = s' f).
PSeries series_exp(const PSeries& s);

// Ordinary generating function Phi(w) = phi_0 + phi_1 w + ... + phi_N w^N
// in generic phi symbols, optionally with phi_0 set to 1.
PSeries phi_series(int order, bool phi0_one);

// The generic Lah polynomial L_{n,k} at phi_0 = 1 via Lagrange inversion:
// (n-1)!/(k-1)! [z^{n-k}] PsiHat(z)^{-n} where Psi = 1/Phi and
// PsiHat(z) = 1 + sum_i psi_i/(i+1) z^i.  bindings substitute values for
// the phi symbols (empty = fully generic).
MPoly lagrange_lah(int n, int k, const std::map<Var, MPoly>& bindings = {});

} // namespace lahkit
