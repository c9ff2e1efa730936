#include "lahkit/diffop.hpp"

namespace lahkit {

MPoly diff_op_apply(const DiffOpSpec& op, const MPoly& p) {
    if (op.r < 1) throw domain_error("diff_op_apply: need r >= 1");
    MPoly out;
    MPoly xsum;
    for (int i = 1; i <= op.r; ++i) xsum += MPoly(Var::x(i));
    for (int i = 1; i <= op.r; ++i) {
        MPoly xi(Var::x(i));
        MPoly coeff;
        if (op.minus) {
            coeff = xi * xi + xi * xsum;
        } else {
            coeff = xi * (xsum - xi);
        }
        if (!coeff.is_zero()) out += coeff * p.derivative(Var::x(i));
    }
    if (op.include_y) out += xsum * MPoly(Var::y()) * p.derivative(Var::y());
    return out;
}

MPoly lah_via_diffop(int r, DiffSign sign, int n) {
    if (n < 0) throw domain_error("lah_via_diffop: need n >= 0");
    DiffOpSpec op = sign == DiffSign::Plus ? DiffOpSpec::plus(r, true)
                                           : DiffOpSpec::neg(r, true);
    MPoly y(Var::y());
    MPoly acc(1);
    for (int step = 0; step < n; ++step) acc = diff_op_apply(op, acc) + y * acc;
    return acc;
}

} // namespace lahkit
