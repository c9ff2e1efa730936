#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lahkit/scalar.hpp"
#include "lahkit/variable.hpp"

namespace lahkit {

// Monomial: sorted (var, exponent) pairs, exponents >= 1.  The empty
// monomial is the constant 1.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(Var v, int exp = 1) {
        if (exp > 0) factors_.emplace_back(v, exp);
    }
    static Monomial from_factors(std::vector<std::pair<Var, int>> factors);

    const std::vector<std::pair<Var, int>>& factors() const { return factors_; }
    bool is_constant() const { return factors_.empty(); }
    int total_degree() const;
    int exponent_of(Var v) const;

    Monomial operator*(const Monomial& o) const;
    // Componentwise quotient; nullopt when o does not divide *this.
    std::optional<Monomial> divide(const Monomial& o) const;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    std::string to_string() const;  // e.g. "phi1^2*phi3"
    std::string pretty() const;     // e.g. "phi_1^2 phi_3"

private:
    std::vector<std::pair<Var, int>> factors_;
};

// Graded lexicographic order on monomials: larger total degree wins, ties
// broken lexicographically on the registered variable order.  This is the
// canonical serialization order (terms are emitted descending).
bool grlex_less(const Monomial& a, const Monomial& b);

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grlex_less(b, a);
    }
};

// Sparse multivariate polynomial with exact rational coefficients.  No zero
// coefficients are ever stored; the term map is ordered grlex-descending, so
// begin() is the leading term.
class MPoly {
public:
    using TermMap = std::map<Monomial, Scalar, GrlexGreater>;

    MPoly() = default;
    MPoly(long n) { if (n != 0) terms_.emplace(Monomial{}, Scalar(n)); }
    MPoly(const Scalar& s) { if (!s.is_zero()) terms_.emplace(Monomial{}, s); }
    MPoly(const Integer& n) : MPoly(Scalar(n)) {}
    explicit MPoly(Var v) { terms_.emplace(Monomial(v), Scalar(1)); }
    explicit MPoly(const Monomial& m) { terms_.emplace(m, Scalar(1)); }
    MPoly(const Monomial& m, const Scalar& s) {
        if (!s.is_zero()) terms_.emplace(m, s);
    }

    static MPoly var(Var v, int exp = 1) { return MPoly(Monomial(v, exp)); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
    }
    // Constant term (coefficient of the empty monomial).
    Scalar constant_term() const;
    // The whole polynomial as a Scalar; domain_error when not constant.
    Scalar as_scalar() const;
    std::size_t term_count() const { return terms_.size(); }
    int total_degree() const; // -1 for the zero polynomial
    Scalar coefficient(const Monomial& m) const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly operator*(const MPoly& o) const;
    MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }
    MPoly& operator*=(const Scalar& s);

    friend MPoly operator+(MPoly a, const MPoly& b) { a += b; return a; }
    friend MPoly operator-(MPoly a, const MPoly& b) { a -= b; return a; }
    friend MPoly operator*(MPoly p, const Scalar& s) { p *= s; return p; }
    friend MPoly operator*(const Scalar& s, MPoly p) { p *= s; return p; }

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    // Simultaneous substitution; variables absent from the map are kept.
    MPoly substitute(const std::map<Var, MPoly>& bindings) const;
    // Partial derivative with respect to v.
    MPoly derivative(Var v) const;
    // Exact division; throws domain_error when d does not divide *this.
    MPoly divide_exact(const MPoly& d) const;
    MPoly pow(int e) const;

    // True iff every stored coefficient is >= 0; otherwise returns the
    // grlex-greatest offending term as witness.
    bool is_coeffwise_nonneg(
        std::optional<std::pair<Monomial, Scalar>>* witness = nullptr) const;

    // True iff every coefficient is an integer.
    bool has_integer_coefficients() const;

    std::string to_string() const;
    std::string pretty() const;

    // Terms listed in the display order of the reference tables: ascending
    // lexicographic on the exponent vector read from the highest variable
    // downwards.
    std::vector<std::pair<Monomial, Scalar>> terms_in_table_order() const;

private:
    TermMap terms_;
    void add_term(const Monomial& m, const Scalar& c);
};

// Substitution keyed by names; validates each name against the alphabet
// (unknown_name) before delegating to MPoly::substitute.
MPoly substitute_named(const MPoly& p, const std::map<std::string, MPoly>& bindings);

} // namespace lahkit
