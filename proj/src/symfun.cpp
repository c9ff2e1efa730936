#include "lahkit/symfun.hpp"

#include <algorithm>

#include "lahkit/prodmat.hpp"

namespace lahkit {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (int v : parts)
        if (v < 1) throw domain_error("Partition: parts must be positive");
    if (!std::is_sorted(parts.rbegin(), parts.rend()))
        throw domain_error("Partition: parts must be weakly decreasing");
}

int Partition::size() const {
    int s = 0;
    for (int v : parts) s += v;
    return s;
}

std::string Partition::digits() const {
    std::string s;
    for (int v : parts) s += std::to_string(v);
    return s;
}

bool TableOrder::operator()(const Partition& a, const Partition& b) const {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.parts < b.parts;
}

std::string MBasisExpr::to_string() const {
    if (coeffs.empty()) return "0";
    std::string s;
    for (auto& [lam, c] : coeffs) {
        if (!s.empty()) s += " + ";
        if (lam.parts.empty()) {
            s += c.to_string();
        } else {
            if (!c.is_one()) s += c.to_string();
            s += "m" + lam.digits();
        }
    }
    return s;
}

MPoly monomial_sym(const Partition& lambda, int r) {
    if (lambda.length() > r) return MPoly();
    std::vector<int> exps(r, 0);
    std::copy(lambda.parts.begin(), lambda.parts.end(), exps.begin());
    std::sort(exps.begin(), exps.end());
    MPoly out;
    do {
        std::vector<std::pair<Var, int>> fac;
        for (int i = 0; i < r; ++i)
            if (exps[i] > 0) fac.emplace_back(Var::x(i + 1), exps[i]);
        out += MPoly(Monomial::from_factors(fac));
    } while (std::next_permutation(exps.begin(), exps.end()));
    return out;
}

MBasisExpr to_monomial_basis(const MPoly& p, int degree, int r) {
    MBasisExpr out;
    out.degree = degree;
    if (p.is_zero()) return out;
    if (r < degree)
        throw domain_error("to_monomial_basis: need r >= degree for stable coefficients");
    if (p.total_degree() != degree)
        throw domain_error("to_monomial_basis: degree mismatch");

    MPoly rem = p;
    while (!rem.is_zero()) {
        const auto& [mono, coeff] = *rem.terms().begin();
        if (mono.total_degree() != degree)
            throw domain_error("to_monomial_basis: input not homogeneous");
        // Exponent vector over x_1..x_r; anything but x variables means the
        // input is outside the symmetric subring.
        std::vector<int> exps(r, 0);
        for (auto& [v, e] : mono.factors()) {
            if (v.family != VarFamily::X || v.index > r)
                throw not_symmetric("to_monomial_basis: non-x variable " + v.name());
            exps[v.index - 1] = e;
        }
        // The grlex leading monomial of a symmetric polynomial has weakly
        // decreasing exponents; a violation certifies non-symmetry.
        std::vector<int> sorted = exps;
        std::sort(sorted.rbegin(), sorted.rend());
        if (exps != sorted)
            throw not_symmetric("to_monomial_basis: term " + mono.to_string() +
                                " has no matching partner " +
                                Monomial::from_factors([&] {
                                    std::vector<std::pair<Var, int>> f;
                                    for (int i = 0; i < r; ++i)
                                        if (sorted[i] > 0) f.emplace_back(Var::x(i + 1), sorted[i]);
                                    return f;
                                }()).to_string());
        std::vector<int> parts;
        for (int e : sorted)
            if (e > 0) parts.push_back(e);
        Partition lam(parts);
        out.coeffs.emplace(lam, coeff);
        rem -= monomial_sym(lam, r) * coeff;
    }
    return out;
}

LahSymfunTable lah_symfun_table(int n_max, LahSign sign, int cap) {
    if (n_max > cap) throw cap_exceeded("lah_symfun_table: n_max exceeds cap");
    LahSymfunTable table;
    table.n_max = n_max;
    table.sign = sign;

    const int r = std::max(1, n_max - 1); // max degree of any cell is n_max - 1
    WeightSpec w = sign == LahSign::Plus ? WeightSpec::elementary(r)
                                         : WeightSpec::homogeneous(r);
    PolyMatrix tri = lah_triangle(n_max, w);

    table.cells.assign(n_max + 1, std::vector<MBasisExpr>(n_max + 1));
    for (int n = 0; n <= n_max; ++n)
        for (int k = 0; k <= n; ++k) {
            table.cells[n][k] = to_monomial_basis(tri.at(n, k), n - k, r);
            for (auto& [lam, c] : table.cells[n][k].coeffs)
                if (!c.is_integer())
                    throw domain_error("lah_symfun_table: non-integer coefficient");
        }
    return table;
}

} // namespace lahkit
