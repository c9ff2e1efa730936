#pragma once

#include <map>
#include <string>

#include "lahkit/symfun.hpp"

namespace lahkit {

// Golden reference tables shipped under data/: the generic triangle (A1,
// phi polynomials at phi0 = 1) and the two symmetric-function tables
// (A2 = positive type, A3 = negative type, in the m_lambda basis).

struct GoldenGeneric {
    int n_max = 0;
    std::map<std::pair<int, int>, MPoly> cells;
};

struct GoldenSymfun {
    int n_max = 0;
    std::map<std::pair<int, int>, MBasisExpr> cells;
};

GoldenGeneric load_golden_generic(const std::string& path);
GoldenSymfun load_golden_symfun(const std::string& path);

std::string default_data_dir();

struct CellDiff {
    int n = 0, k = 0;
    std::string computed, expected;
};

struct DiffReport {
    int cells_checked = 0;
    std::vector<CellDiff> mismatches;
    bool ok() const { return mismatches.empty(); }
};

// Computes the generic triangle (phi0 -> 1) and diffs against the golden
// table, cell by cell.
DiffReport diff_generic_triangle(const GoldenGeneric& golden, int n_max);
// Computes the symmetric-function table and diffs against the golden table.
DiffReport diff_symfun_table(const GoldenSymfun& golden, LahSign sign, int n_max);

// Parsers for the restricted polynomial grammar used in the data files.
MPoly parse_phi_poly(const std::string& text);
MBasisExpr parse_mbasis(const std::string& text);

} // namespace lahkit
