#include "lahkit/sfrac_search.hpp"

#include <algorithm>

namespace lahkit {

namespace {

inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    return (s < a || s > kSatLimit) ? kSatLimit : s;
}

inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > kSatLimit / b) return kSatLimit;
    return a * b;
}

} // namespace

std::vector<std::uint64_t> sr_values_saturating(int m, int n_max,
                                                const std::vector<std::uint64_t>& alpha) {
    const int len = (m + 1) * n_max;
    std::vector<std::uint64_t> cur(len + 1, 0), nxt(len + 1, 0);
    std::vector<std::uint64_t> out(n_max + 1, 0);
    cur[0] = 1;
    out[0] = 1;
    for (int step = 1; step <= len; ++step) {
        std::fill(nxt.begin(), nxt.end(), 0);
        for (int h = 0; h < step; ++h) {
            std::uint64_t v = cur[h];
            if (!v) continue;
            if (h + 1 <= len) nxt[h + 1] = sat_add(nxt[h + 1], v);
            if (h - m >= 0) {
                std::uint64_t a = h < (int)alpha.size() ? alpha[h] : 0;
                if (a) nxt[h - m] = sat_add(nxt[h - m], sat_mul(v, a));
            }
        }
        std::swap(cur, nxt);
        if (step % (m + 1) == 0) out[step / (m + 1)] = cur[0];
    }
    return out;
}

SfracSearchResult sfrac_search(const std::vector<std::int64_t>& target, int m,
                               std::int64_t coeff_bound, std::uint64_t node_budget) {
    if (m < 1) throw domain_error("sfrac_search: need m >= 1");
    if (target.empty() || target[0] != 1)
        throw domain_error("sfrac_search: target[0] must be 1");
    if (coeff_bound < 0) throw domain_error("sfrac_search: negative coefficient bound");
    for (std::int64_t t : target)
        if (t < 0) throw domain_error("sfrac_search: negative target value");

    const int n_max = static_cast<int>(target.size()) - 1;
    // The highest fall height in a path of length (m+1)n_max is m*n_max
    // (all rises first); no S_n depends on any later alpha.
    const int last_index = m * n_max;
    SfracSearchResult res;
    if (n_max == 0) {
        res.status = SfracSearchResult::Status::Found;
        return res;
    }

    std::vector<std::uint64_t> lo_alpha(last_index + 1, 0);
    std::vector<std::uint64_t> hi_alpha(last_index + 1,
                                        static_cast<std::uint64_t>(coeff_bound));

    // prune() evaluates the reachable interval for every S_n given the
    // assignment of alpha_m..alpha_j; returns false when some target is
    // unreachable.
    auto feasible = [&](int assigned_up_to) {
        for (int i = m; i <= assigned_up_to; ++i) hi_alpha[i] = lo_alpha[i];
        auto lo = sr_values_saturating(m, n_max, lo_alpha);
        auto hi = sr_values_saturating(m, n_max, hi_alpha);
        for (int i = assigned_up_to + 1; i <= last_index; ++i)
            hi_alpha[i] = static_cast<std::uint64_t>(coeff_bound);
        for (int n = 1; n <= n_max; ++n) {
            std::uint64_t t = static_cast<std::uint64_t>(target[n]);
            if (lo[n] > t) return false;
            if (hi[n] < t) return false;
        }
        return true;
    };

    bool budget_hit = false;
    std::function<bool(int)> dfs = [&](int idx) -> bool {
        if (res.nodes_visited >= node_budget) {
            budget_hit = true;
            return false;
        }
        if (idx > last_index) {
            // Fully assigned; feasible() at the last index already compared
            // exact values against every target.
            return true;
        }
        for (std::int64_t v = 0; v <= coeff_bound; ++v) {
            ++res.nodes_visited;
            res.frontier_index = std::max(res.frontier_index, idx);
            lo_alpha[idx] = static_cast<std::uint64_t>(v);
            if (feasible(idx)) {
                if (dfs(idx + 1)) return true;
                if (budget_hit) { lo_alpha[idx] = 0; return false; }
            }
        }
        lo_alpha[idx] = 0;
        return false;
    };

    bool found = dfs(m);
    if (found) {
        res.status = SfracSearchResult::Status::Found;
        res.alpha.assign(lo_alpha.begin(), lo_alpha.end());
    } else if (budget_hit) {
        res.status = SfracSearchResult::Status::BudgetExceeded;
    } else {
        res.status = SfracSearchResult::Status::Exhausted;
    }
    return res;
}

} // namespace lahkit
