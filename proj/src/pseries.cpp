#include "lahkit/pseries.hpp"

namespace lahkit {

PSeries PSeries::one(int order) {
    PSeries s(order);
    s.coeffs_[0] = MPoly(1);
    return s;
}

PSeries PSeries::t_var(int order) {
    PSeries s(order);
    if (order >= 1) s.coeffs_[1] = MPoly(1);
    return s;
}

PSeries PSeries::to_ogf() const {
    if (!egf_) return *this;
    PSeries s = *this;
    s.egf_ = false;
    for (int n = 2; n <= s.order(); ++n)
        s.coeffs_[n] *= Scalar(Integer(1), factorial(n));
    return s;
}

PSeries PSeries::to_egf() const {
    if (egf_) return *this;
    PSeries s = *this;
    s.egf_ = true;
    for (int n = 2; n <= s.order(); ++n) s.coeffs_[n] *= Scalar(factorial(n));
    return s;
}

PSeries PSeries::truncated(int order) const {
    PSeries s(order);
    s.egf_ = egf_;
    for (int n = 0; n <= order && n <= this->order(); ++n) s.coeffs_[n] = coeffs_[n];
    return s;
}

namespace {
void require_ogf(const PSeries& s, const char* what) {
    if (s.egf()) throw domain_error(std::string(what) + ": convert to ordinary form first");
}
} // namespace

PSeries PSeries::operator+(const PSeries& o) const {
    require_ogf(*this, "PSeries::+");
    require_ogf(o, "PSeries::+");
    int n = std::min(order(), o.order());
    PSeries r(n);
    for (int i = 0; i <= n; ++i) r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return r;
}

PSeries PSeries::operator-(const PSeries& o) const {
    require_ogf(*this, "PSeries::-");
    require_ogf(o, "PSeries::-");
    int n = std::min(order(), o.order());
    PSeries r(n);
    for (int i = 0; i <= n; ++i) r.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    return r;
}

PSeries PSeries::operator*(const PSeries& o) const {
    require_ogf(*this, "PSeries::*");
    require_ogf(o, "PSeries::*");
    int n = std::min(order(), o.order());
    PSeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (o.coeffs_[j].is_zero()) continue;
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return r;
}

PSeries PSeries::operator*(const MPoly& c) const {
    PSeries r = *this;
    for (auto& v : r.coeffs_) v = v * c;
    return r;
}

PSeries PSeries::reciprocal() const {
    require_ogf(*this, "PSeries::reciprocal");
    if (!coeffs_[0].is_constant() || coeffs_[0].is_zero())
        throw domain_error("PSeries::reciprocal: non-unit constant term");
    Scalar c0inv = Scalar(1) / coeffs_[0].as_scalar();
    const int n = order();
    PSeries r(n);
    r.coeffs_[0] = MPoly(c0inv);
    for (int m = 1; m <= n; ++m) {
        MPoly acc;
        for (int i = 1; i <= m; ++i) acc += coeffs_[i] * r.coeffs_[m - i];
        r.coeffs_[m] = -acc * c0inv;
    }
    return r;
}

PSeries PSeries::compose(const PSeries& g) const {
    require_ogf(*this, "PSeries::compose");
    require_ogf(g, "PSeries::compose");
    if (!g.coeffs_[0].is_zero())
        throw domain_error("PSeries::compose: inner constant term must be 0");
    // g(0) = 0, so f_i g^i vanishes to order n for i > n: Horner from f_n.
    const int n = std::min(order(), g.order());
    PSeries gt = g.truncated(n);
    PSeries r(n);
    r.coeffs_[0] = coeffs_[n];
    for (int i = n - 1; i >= 0; --i) {
        r = r * gt;
        r.coeffs_[0] += coeffs_[i];
    }
    return r;
}

PSeries PSeries::compositional_inverse() const {
    require_ogf(*this, "PSeries::compositional_inverse");
    if (!coeffs_[0].is_zero())
        throw domain_error("compositional_inverse: constant term must be 0");
    if (!coeffs_[1].is_constant() || coeffs_[1].is_zero())
        throw domain_error("compositional_inverse: linear coefficient must be invertible");
    const int n = order();
    // [t^m] Ginv = (1/m) [u^{m-1}] (u/G(u))^m
    PSeries u_over_g(n);
    {
        // G(u)/u shifted down one degree, then reciprocal
        PSeries shifted(n);
        for (int i = 0; i + 1 <= n; ++i) shifted.coeff(i) = coeffs_[i + 1];
        u_over_g = shifted.reciprocal();
    }
    PSeries inv(n);
    PSeries power = PSeries::one(n);
    for (int m = 1; m <= n; ++m) {
        power = power * u_over_g;
        inv.coeff(m) = power.coeff(m - 1) * Scalar(Integer(1), Integer(m));
    }
    return inv;
}

PSeries PSeries::derivative() const {
    require_ogf(*this, "PSeries::derivative");
    if (order() < 1) return PSeries(0);
    PSeries r(order() - 1);
    for (int i = 1; i <= order(); ++i) r.coeffs_[i - 1] = coeffs_[i] * Scalar(i);
    return r;
}

PSeries PSeries::integrate() const {
    require_ogf(*this, "PSeries::integrate");
    PSeries r(order() + 1);
    for (int i = 0; i <= order(); ++i)
        r.coeffs_[i + 1] = coeffs_[i] * Scalar(Integer(1), Integer(i + 1));
    return r;
}

PSeries ode_solve_autonomous(const PSeries& a, int order) {
    PSeries u(order);
    for (int n = 0; n < order; ++n) {
        // u_{n+1} = [t^n] A(U_{<=n}) / (n+1)
        PSeries rhs = a.truncated(n).compose(u.truncated(n));
        u.coeff(n + 1) = rhs.coeff(n) * Scalar(Integer(1), Integer(n + 1));
    }
    return u;
}

PSeries series_exp(const PSeries& s) {
    if (!s.coeff(0).is_zero())
        throw domain_error("series_exp: constant term must be 0");
    const int n = s.order();
    PSeries ds = s.derivative();
    PSeries f(n);
    f.coeff(0) = MPoly(1);
    // f' = s' f, solved coefficient by coefficient.
    for (int m = 1; m <= n; ++m) {
        MPoly acc;
        for (int i = 0; i < m; ++i)
            if (i <= ds.order()) acc += ds.coeff(i) * f.coeff(m - 1 - i);
        f.coeff(m) = acc * Scalar(Integer(1), Integer(m));
    }
    return f;
}

PSeries phi_series(int order, bool phi0_one) {
    PSeries phi(order);
    phi.coeff(0) = phi0_one ? MPoly(1) : MPoly(Var::phi(0));
    for (int i = 1; i <= order; ++i) phi.coeff(i) = MPoly(Var::phi(i));
    return phi;
}

MPoly lagrange_lah(int n, int k, const std::map<Var, MPoly>& bindings) {
    if (n < 1 || k < 1 || k > n) throw domain_error("lagrange_lah: need n >= k >= 1");
    const int m = n - k; // the z-order we need
    PSeries phi = phi_series(m, /*phi0_one=*/true);
    if (!bindings.empty())
        for (int i = 0; i <= m; ++i) phi.coeff(i) = phi.coeff(i).substitute(bindings);
    PSeries psi = phi.reciprocal();
    PSeries psihat(m);
    psihat.coeff(0) = MPoly(1);
    for (int i = 1; i <= m; ++i)
        psihat.coeff(i) = psi.coeff(i) * Scalar(Integer(1), Integer(i + 1));
    // PsiHat^{-n}
    PSeries rec = psihat.reciprocal();
    PSeries pw = PSeries::one(m);
    for (int e = 0; e < n; ++e) pw = pw * rec;
    MPoly coeff = pw.coeff(m);
    return Scalar(factorial(n - 1)) * coeff * Scalar(Integer(1), factorial(k - 1));
}

} // namespace lahkit
