#include "lahkit/riordan.hpp"

namespace lahkit {

PolyMatrix riordan_array(const PSeries& f, const PSeries& g, int size) {
    if (f.order() < size - 1 || g.order() < size - 1)
        throw insufficient_sequence("riordan_array: series order too small");
    if (f.coeff(0) != MPoly(1))
        throw domain_error("riordan_array: F(0) must be 1");
    if (!g.coeff(0).is_zero())
        throw domain_error("riordan_array: G(0) must be 0");
    if (size > 1 && (!g.coeff(1).is_constant() || g.coeff(1).is_zero()))
        throw domain_error("riordan_array: G'(0) must be invertible");

    PolyMatrix r(size, size);
    PSeries col = f.truncated(size - 1); // F G^k / k! without the 1/k!
    for (int k = 0; k < size; ++k) {
        if (k > 0) col = col * g.truncated(size - 1);
        Scalar kfac_inv = Scalar(Integer(1), factorial(k));
        for (int n = k; n < size; ++n)
            r.at(n, k) = Scalar(factorial(n)) * kfac_inv * col.coeff(n);
    }
    return r;
}

PolyMatrix riordan_production(const std::vector<MPoly>& a_seq,
                              const std::vector<MPoly>& z_seq, int size) {
    auto a = [&](int i) { return (i >= 0 && i < (int)a_seq.size()) ? a_seq[i] : MPoly(); };
    auto z = [&](int i) { return (i >= 0 && i < (int)z_seq.size()) ? z_seq[i] : MPoly(); };
    PolyMatrix p(size, size);
    for (int n = 0; n < size; ++n)
        for (int k = 0; k <= n + 1 && k < size; ++k) {
            MPoly inner = z(n - k) + Scalar(k) * a(n - k + 1);
            if (inner.is_zero()) continue;
            // n!/k! is integral only for k <= n; for k = n+1 the a-term
            // carries the factor k, giving (n!/(n+1)!)(n+1) a_0 = a_0.
            if (k <= n)
                p.at(n, k) = Scalar(rising_product(k + 1, n)) * inner;
            else
                p.at(n, k) = a(0);
        }
    return p;
}

RiordanPair riordan_from_sequences(const PSeries& a, const PSeries& z, int order) {
    RiordanPair out;
    out.g = ode_solve_autonomous(a, order);
    // F = exp( integral of Z(G(t)) dt )
    PSeries zg = z.truncated(order).compose(out.g.truncated(order));
    out.f = series_exp(zg.integrate().truncated(order));
    return out;
}

} // namespace lahkit
