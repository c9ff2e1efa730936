#pragma once

#include <vector>

#include "lahkit/mpoly.hpp"

namespace lahkit {

// Elementary symmetric polynomial e_i(x_1..x_r); zero for i > r.
MPoly elementary_sym(int i, int r);
// Complete homogeneous symmetric polynomial h_i(x_1..x_r).
MPoly homogeneous_sym(int i, int r);

// A weight-sequence specification: what to substitute for the vertex
// weights phi_i (and their level-refined variants phi_i^[L]).
class WeightSpec {
public:
    enum class Kind {
        Generic,      // phi_i stays the symbol phi_i
        Refined,      // level-dependent symbols phi_i^[L]
        Elementary,   // phi_i -> e_i(x_1..x_r)
        Homogeneous,  // phi_i -> h_i(x_1..x_r)
        PhiTimesC,    // phi_i^[L] -> phi_i * c_L
        Explicit,     // phi_i -> values[i] (zero past the end)
    };

    static WeightSpec generic() { return WeightSpec(Kind::Generic, 0, {}); }
    static WeightSpec refined() { return WeightSpec(Kind::Refined, 0, {}); }
    static WeightSpec elementary(int r) { return WeightSpec(Kind::Elementary, r, {}); }
    static WeightSpec homogeneous(int r) { return WeightSpec(Kind::Homogeneous, r, {}); }
    static WeightSpec phi_times_c() { return WeightSpec(Kind::PhiTimesC, 0, {}); }
    static WeightSpec explicit_values(std::vector<MPoly> values) {
        return WeightSpec(Kind::Explicit, 0, std::move(values));
    }
    // phi_i = binomial(r, i), the e-specialization at x = 1.
    static WeightSpec binom_values(int r, int length);
    // phi_i = binomial(r+i-1, i), the h-specialization at x = 1.
    static WeightSpec hom_values(int r, int length);
    static WeightSpec ones(int length);

    Kind kind() const { return kind_; }
    int r() const { return r_; }
    const std::vector<MPoly>& values() const { return values_; }
    bool is_level_refined() const {
        return kind_ == Kind::Refined || kind_ == Kind::PhiTimesC;
    }

    // Weight of a vertex with i children.
    MPoly phi(int i) const;
    // Weight of a vertex with i children at level L.
    MPoly phi(int i, int level) const;

    std::string describe() const;

private:
    WeightSpec(Kind k, int r, std::vector<MPoly> values)
        : kind_(k), r_(r), values_(std::move(values)) {}
    Kind kind_;
    int r_;
    std::vector<MPoly> values_;
};

} // namespace lahkit
