#include "lahkit/totalpos.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <thread>

namespace lahkit {

MPoly det_cofactor(const PolyMatrix& m) {
    const int n = m.rows();
    if (m.cols() != n) throw shape_error("det_cofactor: not square");
    if (n == 0) return MPoly(1);
    if (n == 1) return m.at(0, 0);
    MPoly det;
    std::vector<int> cols(n - 1);
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        PolyMatrix sub(n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int c = 0; c < n; ++c)
                if (c != j) sub.at(i - 1, cc++) = m.at(i, c);
        }
        MPoly term = m.at(0, j) * det_cofactor(sub);
        if (j % 2) det -= term;
        else det += term;
    }
    return det;
}

MPoly det_bareiss(const PolyMatrix& m) {
    const int n = m.rows();
    if (m.cols() != n) throw shape_error("det_bareiss: not square");
    if (n == 0) return MPoly(1);
    std::vector<std::vector<MPoly>> a(n, std::vector<MPoly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);

    int sign = 1;
    MPoly prev(1);
    for (int k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!a[i][k].is_zero()) { swap_row = i; break; }
            if (swap_row < 0) return MPoly(); // whole column zero below: det 0
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                MPoly num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                a[i][j] = num.divide_exact(prev);
            }
        prev = a[k][k];
    }
    MPoly det = a[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

MPoly minor_det(const PolyMatrix& m, const std::vector<int>& rows,
                const std::vector<int>& cols) {
    if (rows.size() != cols.size())
        throw shape_error("minor_det: row/col count mismatch");
    for (int i : rows)
        if (i < 0 || i >= m.rows()) throw shape_error("minor_det: row index out of range");
    for (int j : cols)
        if (j < 0 || j >= m.cols()) throw shape_error("minor_det: col index out of range");
    const int s = static_cast<int>(rows.size());
    PolyMatrix sub(s, s);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) sub.at(i, j) = m.at(rows[i], cols[j]);
    MPoly det = det_bareiss(sub);
    if (s <= 4) {
        MPoly check = det_cofactor(sub);
        if (det != check)
            throw domain_error("minor_det: Bareiss and cofactor routes disagree");
    }
    return det;
}

namespace {

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(k);
    std::function<void(int, int)> rec = [&](int start, int picked) {
        if (picked == k) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v <= n - (k - picked); ++v) {
            cur[picked] = v;
            rec(v + 1, picked + 1);
        }
    };
    rec(0, 0);
    return out;
}

struct MinorTask {
    std::vector<int> rows, cols;
};

std::optional<TPWitness> eval_task(const PolyMatrix& m, const MinorTask& t) {
    MPoly det = minor_det(m, t.rows, t.cols);
    std::optional<std::pair<Monomial, Scalar>> w;
    if (det.is_coeffwise_nonneg(&w)) return std::nullopt;
    TPWitness tw;
    tw.rows = t.rows;
    tw.cols = t.cols;
    tw.monomial = w->first;
    tw.coeff = w->second;
    tw.minor_value = det;
    return tw;
}

} // namespace

TPReport tp_check(const PolyMatrix& m, int r, int jobs, long max_minors) {
    if (r < 1) throw domain_error("tp_check: order must be >= 1");
    TPReport rep;
    rep.order = r;

    std::vector<MinorTask> tasks;
    long total = 0;
    for (int s = 1; s <= r && s <= std::min(m.rows(), m.cols()); ++s) {
        auto rsets = subsets(m.rows(), s);
        auto csets = subsets(m.cols(), s);
        for (auto& rs : rsets)
            for (auto& cs : csets) {
                ++total;
                if (max_minors >= 0 && total > max_minors) {
                    ++rep.remaining;
                    continue;
                }
                tasks.push_back({rs, cs});
            }
    }

    if (jobs <= 1) {
        for (auto& t : tasks) {
            auto w = eval_task(m, t);
            if (w) {
                rep.pass = false;
                rep.witness = std::move(w);
                return rep;
            }
        }
        return rep;
    }

    // Parallel scan in fixed-size chunks; the chunks are joined in canonical
    // order, so the reported witness is schedule-independent.
    const size_t chunk = std::max<size_t>(1, tasks.size() / (4 * jobs) + 1);
    for (size_t base = 0; base < tasks.size() && rep.pass; base += chunk * jobs) {
        std::vector<std::future<std::optional<TPWitness>>> futs;
        for (int w = 0; w < jobs; ++w) {
            size_t lo = base + w * chunk;
            size_t hi = std::min(tasks.size(), lo + chunk);
            if (lo >= hi) break;
            futs.push_back(std::async(std::launch::async, [&m, &tasks, lo, hi]() {
                std::optional<TPWitness> first;
                for (size_t i = lo; i < hi && !first; ++i)
                    first = eval_task(m, tasks[i]);
                return first;
            }));
        }
        for (auto& f : futs) {
            auto w = f.get();
            if (w && rep.pass) {
                rep.pass = false;
                rep.witness = std::move(w);
            }
        }
    }
    return rep;
}

TPReport seq_tp_check(const std::vector<MPoly>& seq, SeqMatrixKind kind, int r,
                      int size, int jobs) {
    return tp_check(seq_matrix(seq, kind, size), r, jobs);
}

PolyMatrix diag_rescale(const PolyMatrix& m, const std::vector<MPoly>& d) {
    if (!m.is_lower_triangular())
        throw shape_error("diag_rescale: matrix must be lower-triangular");
    // d is 1-indexed in the formula b_{ij} = d_{j+1} ... d_i; d[l-1] is d_l.
    if (static_cast<int>(d.size()) < m.rows() - 1)
        throw shape_error("diag_rescale: need at least rows-1 entries in d");
    PolyMatrix b(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j <= i && j < m.cols(); ++j) {
            MPoly f(1);
            for (int l = j + 1; l <= i; ++l) f *= d[l - 1];
            b.at(i, j) = f * m.at(i, j);
        }
    return b;
}

} // namespace lahkit
