#include "lahkit/weightspec.hpp"

#include <functional>

namespace lahkit {

MPoly elementary_sym(int i, int r) {
    if (i < 0) throw domain_error("elementary_sym: negative degree");
    if (i == 0) return MPoly(1);
    if (i > r) return MPoly();
    // e(j, s) = e_j(x_1..x_s) by the Pascal-style recursion.
    std::vector<MPoly> row(i + 1);
    row[0] = MPoly(1);
    for (int s = 1; s <= r; ++s) {
        MPoly xs(Var::x(s));
        for (int j = std::min(i, s); j >= 1; --j) row[j] += row[j - 1] * xs;
    }
    return row[i];
}

MPoly homogeneous_sym(int i, int r) {
    if (i < 0) throw domain_error("homogeneous_sym: negative degree");
    if (r < 1) throw domain_error("homogeneous_sym: need r >= 1");
    if (i == 0) return MPoly(1);
    // h_i over s variables: h(i,s) = h(i,s-1) + x_s h(i-1,s).
    std::vector<MPoly> prev(i + 1), cur(i + 1);
    prev[0] = MPoly(1); // s = 0: only h_0
    for (int s = 1; s <= r; ++s) {
        MPoly xs(Var::x(s));
        cur[0] = MPoly(1);
        for (int j = 1; j <= i; ++j) cur[j] = prev[j] + xs * cur[j - 1];
        prev = cur;
    }
    return prev[i];
}

WeightSpec WeightSpec::binom_values(int r, int length) {
    std::vector<MPoly> v(length);
    for (int i = 0; i < length; ++i) v[i] = MPoly(Scalar(binomial(r, i)));
    return explicit_values(std::move(v));
}

WeightSpec WeightSpec::hom_values(int r, int length) {
    std::vector<MPoly> v(length);
    for (int i = 0; i < length; ++i) v[i] = MPoly(Scalar(binomial(r + i - 1, i)));
    return explicit_values(std::move(v));
}

WeightSpec WeightSpec::ones(int length) {
    return explicit_values(std::vector<MPoly>(length, MPoly(1)));
}

MPoly WeightSpec::phi(int i) const {
    if (i < 0) return MPoly();
    switch (kind_) {
        case Kind::Generic: return MPoly(Var::phi(i));
        case Kind::Refined:
            throw domain_error("WeightSpec: refined weights need a level");
        case Kind::Elementary: return elementary_sym(i, r_);
        case Kind::Homogeneous: return homogeneous_sym(i, r_);
        case Kind::PhiTimesC:
            throw domain_error("WeightSpec: phi*c weights need a level");
        case Kind::Explicit:
            return i < static_cast<int>(values_.size()) ? values_[i] : MPoly();
    }
    return MPoly();
}

MPoly WeightSpec::phi(int i, int level) const {
    if (i < 0) return MPoly();
    switch (kind_) {
        case Kind::Refined: return MPoly(Var::phiL(i, level));
        case Kind::PhiTimesC: return MPoly(Var::phi(i)) * MPoly(Var::c(level));
        default: return phi(i);
    }
}

std::string WeightSpec::describe() const {
    switch (kind_) {
        case Kind::Generic: return "generic";
        case Kind::Refined: return "refined";
        case Kind::Elementary: return "elementary(" + std::to_string(r_) + ")";
        case Kind::Homogeneous: return "homogeneous(" + std::to_string(r_) + ")";
        case Kind::PhiTimesC: return "phi*c";
        case Kind::Explicit: {
            std::string s = "values:";
            for (size_t i = 0; i < values_.size(); ++i)
                s += (i ? "," : "") + values_[i].to_string();
            return s;
        }
    }
    return "?";
}

} // namespace lahkit
