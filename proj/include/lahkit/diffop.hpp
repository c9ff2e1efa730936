#pragma once

#include "lahkit/mpoly.hpp"

namespace lahkit {

// First-order linear differential operators acting on Z[x_1..x_r, y]:
//
//   plus:   D_r      = sum_i x_i (sum_{j != i} x_j) d/dx_i
//   minus:  D_r^-    = sum_i (x_i^2 + x_i sum_j x_j) d/dx_i
//   with y: Dt_r^(-) = D_r^(-) + (sum_i x_i) y d/dy
struct DiffOpSpec {
    int r = 1;
    bool minus = false;
    bool include_y = false; // the "tilde" variant

    static DiffOpSpec plus(int r, bool with_y) { return {r, false, with_y}; }
    static DiffOpSpec neg(int r, bool with_y) { return {r, true, with_y}; }
};

MPoly diff_op_apply(const DiffOpSpec& op, const MPoly& p);

enum class DiffSign { Plus, Minus };

// L_n^{(r)+-}(x; y) = (Dt_r^(+-) + y)^n 1.
MPoly lah_via_diffop(int r, DiffSign sign, int n);

} // namespace lahkit
