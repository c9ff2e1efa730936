#include "lahkit/latpath.hpp"

#include <functional>
#include <map>

#include "lahkit/diffop.hpp"

namespace lahkit {

AlphaSeq AlphaSeq::generic(int m) { return AlphaSeq(Kind::Generic, m); }

AlphaSeq AlphaSeq::lah(int r) {
    AlphaSeq a(Kind::LahPattern, r);
    a.perm_.resize(r);
    for (int i = 0; i < r; ++i) a.perm_[i] = i + 1;
    return a;
}

AlphaSeq AlphaSeq::lah_permuted(int r, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != r)
        throw domain_error("AlphaSeq::lah_permuted: permutation size mismatch");
    AlphaSeq a(Kind::LahPattern, r);
    a.perm_ = perm;
    return a;
}

AlphaSeq AlphaSeq::values(int m, std::vector<MPoly> vals) {
    AlphaSeq a(Kind::Values, m);
    a.vals_ = std::move(vals);
    return a;
}

AlphaSeq AlphaSeq::constant(int m, const MPoly& v, int length) {
    return values(m, std::vector<MPoly>(length, v));
}

MPoly AlphaSeq::at(int i) const {
    if (i < 0) throw domain_error("AlphaSeq::at: negative index");
    switch (kind_) {
        case Kind::Generic:
            return MPoly(Var::alpha(i));
        case Kind::LahPattern: {
            const int r = m_;
            int j = i % (r + 1);
            if (j == r) return MPoly(Var::y());
            int mult = i / (r + 1);
            if (mult == 0) return MPoly(); // the r leading zeros
            return Scalar(mult) * MPoly(Var::x(perm_[j]));
        }
        case Kind::Values:
            return i < static_cast<int>(vals_.size()) ? vals_[i] : MPoly();
    }
    return MPoly();
}

namespace {

void check_length(int m, int n, int length_cap, const char* who) {
    if (m < 1) throw domain_error(std::string(who) + ": need m >= 1");
    if (n < 0) throw domain_error(std::string(who) + ": need n >= 0");
    if ((m + 1) * n > length_cap)
        throw cap_exceeded(std::string(who) + ": path length " +
                           std::to_string((m + 1) * n) + " exceeds cap " +
                           std::to_string(length_cap));
}

} // namespace

MPoly sr_poly_general(int m, int n, int k, const AlphaSeq& alpha, int length_cap) {
    check_length(m, n, length_cap, "sr_poly_general");
    if (k < 0 || k > n) return MPoly();
    const int len = (m + 1) * n;
    const int target = (m + 1) * k;
    // f[h] = weight of partial paths with the current number of steps
    // ending at height h.
    std::vector<MPoly> f(len + 1);
    f[0] = MPoly(1);
    for (int step = 0; step < len; ++step) {
        std::vector<MPoly> g(len + 1);
        for (int h = 0; h <= step; ++h) {
            if (f[h].is_zero()) continue;
            if (h + 1 <= len) g[h + 1] += f[h];              // rise
            if (h - m >= 0) g[h - m] += f[h] * alpha.at(h);  // m-fall from h
        }
        f = std::move(g);
    }
    return f[target];
}

MPoly sr_poly(int m, int n, const AlphaSeq& alpha, int length_cap) {
    return sr_poly_general(m, n, 0, alpha, length_cap);
}

void MDyckPath::validate() const {
    if (m < 1) throw invalid_path("MDyckPath: need m >= 1");
    if (rises.size() % (m + 1) != 0)
        throw invalid_path("MDyckPath: length must be a multiple of m+1");
    int h = start_level;
    for (bool up : rises) {
        h += up ? 1 : -m;
        if (h < start_level) throw invalid_path("MDyckPath: dipped below the start level");
    }
    if (h != start_level) throw invalid_path("MDyckPath: open path");
}

MPoly MDyckPath::weight(const AlphaSeq& alpha) const {
    MPoly w(1);
    int h = start_level;
    for (bool up : rises) {
        if (!up) w *= alpha.at(h);
        h += up ? 1 : -m;
    }
    return w;
}

void enumerate_mdyck_paths(int m, int n,
                           const std::function<void(const MDyckPath&)>& visit,
                           int length_cap) {
    check_length(m, n, length_cap, "enumerate_mdyck_paths");
    const int len = (m + 1) * n;
    MDyckPath path;
    path.m = m;
    std::function<void(int, int)> rec = [&](int step, int h) {
        if (step == len) {
            if (h == 0) visit(path);
            return;
        }
        if (h + 1 <= m * (len - step - 1)) {
            path.rises.push_back(true);
            rec(step + 1, h + 1);
            path.rises.pop_back();
        }
        if (h - m >= 0) {
            path.rises.push_back(false);
            rec(step + 1, h - m);
            path.rises.pop_back();
        }
    };
    rec(0, 0);
}

MPoly sr_poly_enumerate(int m, int n, const AlphaSeq& alpha, int length_cap) {
    MPoly total;
    enumerate_mdyck_paths(m, n, [&](const MDyckPath& p) { total += p.weight(alpha); },
                          length_cap);
    return total;
}

PolyMatrix sfrac_production_matrix(int m, const AlphaSeq& alpha, int size) {
    if (size < 1) throw shape_error("sfrac_production_matrix: size >= 1 required");
    if (m < 1) throw domain_error("sfrac_production_matrix: need m >= 1");
    // L(s_1, s_2, ...): ones on the diagonal, s on the subdiagonal.
    auto l_factor = [&](int first_index) {
        PolyMatrix l = PolyMatrix::identity(size);
        for (int i = 1; i < size; ++i)
            l.at(i, i - 1) = alpha.at(first_index + (i - 1) * (m + 1));
        return l;
    };
    // U*(s_1, s_2, ...): s on the diagonal, ones on the superdiagonal.
    PolyMatrix ustar(size, size);
    for (int i = 0; i < size; ++i) {
        ustar.at(i, i) = alpha.at(m + i * (m + 1));
        if (i + 1 < size) ustar.at(i, i + 1) = MPoly(1);
    }
    PolyMatrix p = l_factor(m + 1);
    for (int factor = 2; factor <= m; ++factor) p = p * l_factor(m + factor);
    return p * ustar;
}

PSeries level_series(int m, int k, const AlphaSeq& alpha, int N) {
    // Paths at level k: start and end at height k, stay >= k; an m-fall
    // from absolute height i carries alpha_i.
    const int len = (m + 1) * N;
    const int top = k + len;
    std::vector<std::vector<MPoly>> f(len + 1, std::vector<MPoly>(top + 1));
    f[0][k] = MPoly(1);
    for (int step = 0; step < len; ++step)
        for (int h = k; h <= k + step; ++h) {
            if (f[step][h].is_zero()) continue;
            if (h + 1 <= top) f[step + 1][h + 1] += f[step][h];
            if (h - m >= k) f[step + 1][h - m] += f[step][h] * alpha.at(h);
        }
    PSeries s(N);
    for (int n = 0; n <= N; ++n) s.coeff(n) = f[(m + 1) * n][k];
    return s;
}

FunctionalCheck series_functional_check(int m, const AlphaSeq& alpha, int k_max, int N,
                                        const AlphaSeq* equation_alpha) {
    const AlphaSeq& eq = equation_alpha ? *equation_alpha : alpha;
    FunctionalCheck res;
    std::vector<PSeries> f;
    for (int k = 0; k <= k_max + m; ++k) f.push_back(level_series(m, k, alpha, N));
    PSeries t = PSeries::t_var(N);
    for (int k = 0; k <= k_max; ++k) {
        PSeries rhs = PSeries::one(N);
        for (int j = 0; j <= m; ++j) rhs = rhs * f[k + j];
        rhs = (rhs * t) * eq.at(k + m);
        rhs.coeff(0) += MPoly(1);
        for (int n = 0; n <= N; ++n)
            if (f[k].coeff(n) != rhs.coeff(n)) {
                res.ok = false;
                res.k = k;
                res.order = n;
                return res;
            }
    }
    return res;
}

MPoly euler_gauss_g(int r, int k, int n) {
    if (r < 1) throw domain_error("euler_gauss_g: need r >= 1");
    if (n < 0) return MPoly();
    AlphaSeq alpha = AlphaSeq::lah(r);
    DiffOpSpec op = DiffOpSpec::plus(r, /*with_y=*/true);
    std::map<std::pair<int, int>, MPoly> memo;
    std::function<MPoly(int, int)> g = [&](int kk, int nn) -> MPoly {
        if (nn < 0) return MPoly();
        if (kk < 0) return nn == 0 ? MPoly(1) : MPoly();
        auto it = memo.find({kk, nn});
        if (it != memo.end()) return it->second;
        MPoly val;
        if (nn == 0) {
            val = MPoly(1);
        } else {
            MPoly prev = g(kk, nn - 1);
            MPoly asum;
            for (int i = 1; i <= r; ++i) asum += alpha.at(kk + i);
            val = diff_op_apply(op, prev) + asum * prev + g(kk - r, nn);
        }
        memo.emplace(std::make_pair(kk, nn), val);
        return val;
    };
    return g(k, n);
}

} // namespace lahkit
