#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lahkit/errors.hpp"

namespace lahkit {

// Depth-first search for nonnegative-integer m-branched S-fraction
// coefficients alpha_m .. alpha_{(m+1)n-1} reproducing an integer target
// sequence (target[n] = S_n^{(m)}, target[0] must be 1).
//
// Assignments proceed in index order; at each node the search evaluates the
// interval [S_n(unassigned -> 0), S_n(unassigned -> bound)] for every n and
// prunes when some target falls outside (path weights are monotone in the
// nonnegative alphas).
struct SfracSearchResult {
    enum class Status { Found, Exhausted, BudgetExceeded };
    Status status = Status::Exhausted;
    std::vector<std::int64_t> alpha; // indices 0..(m+1)n-1; below m unused (0)
    std::uint64_t nodes_visited = 0;
    int frontier_index = -1; // deepest alpha index reached when budget ran out
};

SfracSearchResult sfrac_search(const std::vector<std::int64_t>& target, int m,
                               std::int64_t coeff_bound,
                               std::uint64_t node_budget = 50'000'000);

// Saturating evaluation of S_n^{(m)} for all n <= n_max at integer alphas;
// values cap at the saturation limit instead of overflowing.
std::vector<std::uint64_t> sr_values_saturating(int m, int n_max,
                                                const std::vector<std::uint64_t>& alpha);

constexpr std::uint64_t kSatLimit = UINT64_C(0x7fffffffffffffff);

} // namespace lahkit
