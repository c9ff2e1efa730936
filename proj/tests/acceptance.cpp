// Acceptance suite: one line per criterion, exit code = number of failures.
//
// Criterion 8's first clause asserts that already the depth-6 truncation of
// the negative-type sequence admits no 2-branched S-fraction within bound
// 20.  That assertion is false: witnesses exist at that truncation (the
// failing line prints one, verified by two independent evaluators) and only
// die at depth 7, where the search certifies exhaustion.  The clause is
// kept and reported honestly; the full-depth result is printed alongside.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "lahkit/appendix.hpp"
#include "lahkit/diffop.hpp"
#include "lahkit/forest.hpp"
#include "lahkit/latpath.hpp"
#include "lahkit/prodmat.hpp"
#include "lahkit/riordan.hpp"
#include "lahkit/sfrac_search.hpp"
#include "lahkit/totalpos.hpp"

using namespace lahkit;

namespace {

int failures = 0;

void criterion(int number, const std::string& label,
               const std::function<bool(std::string&)>& run) {
    std::string note;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = run(note);
    } catch (const std::exception& e) {
        note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                      .count();
    std::printf("criterion %d: %s  %s (%.2f s)%s%s\n", number, ok ? "PASS" : "FAIL",
                label.c_str(), secs, note.empty() ? "" : " -- ", note.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

PolyMatrix substitute_all(const PolyMatrix& m, const std::map<Var, MPoly>& bind) {
    PolyMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).substitute(bind);
    return r;
}

std::map<Var, MPoly> scalar_phi(const std::function<Scalar(int)>& f, int up_to = 20) {
    std::map<Var, MPoly> bind;
    for (int i = 0; i <= up_to; ++i) bind[Var::phi(i)] = MPoly(f(i));
    return bind;
}

bool crit1_appendix_a1(std::string& note) {
    GoldenGeneric g = load_golden_generic(default_data_dir() + "/appendix_a1.txt");
    DiffReport rep = diff_generic_triangle(g, 7);
    // structural cells not listed in the table: row 0 and column 0
    PolyMatrix tri = lah_triangle(7, WeightSpec::generic());
    bool structure = tri.at(0, 0) == MPoly(1);
    for (int n = 1; n <= 7; ++n) structure = structure && tri.at(n, 0).is_zero();
    // pin the cited witness coefficient: 2304 on phi1 phi2 phi3 in row 7
    MPoly l71 = tri.at(7, 1).substitute({{Var::phi(0), MPoly(1)}});
    Monomial w = Monomial::from_factors(
        {{Var::phi(1), 1}, {Var::phi(2), 1}, {Var::phi(3), 1}});
    bool pinned = l71.coefficient(w) == Scalar(2304);
    note = std::to_string(rep.cells_checked) + " table cells exact";
    return rep.ok() && structure && pinned;
}

bool crit2_appendix_a2_a3(std::string& note) {
    GoldenSymfun a2 = load_golden_symfun(default_data_dir() + "/appendix_a2.txt");
    GoldenSymfun a3 = load_golden_symfun(default_data_dir() + "/appendix_a3.txt");
    DiffReport r2 = diff_symfun_table(a2, LahSign::Plus, 7);
    DiffReport r3 = diff_symfun_table(a3, LahSign::Minus, 7);
    // pin the cited witness coefficients in the (7,1) cells
    LahSymfunTable plus = lah_symfun_table(7, LahSign::Plus);
    LahSymfunTable minus = lah_symfun_table(7, LahSign::Minus);
    bool pinned =
        plus.at(7, 1).coeffs.at(Partition({2, 2, 1, 1})) == Scalar(75216) &&
        minus.at(7, 1).coeffs.at(Partition({2, 2, 2})) == Scalar(122010);
    note = std::to_string(r2.cells_checked + r3.cells_checked) + " table cells exact";
    return r2.ok() && r3.ok() && pinned;
}

bool crit3_oracle_and_bijection(std::string&) {
    for (int n = 0; n <= 6; ++n) {
        PolyMatrix gen = lah_triangle(n, WeightSpec::generic());
        PolyMatrix ref = lah_triangle(n, WeightSpec::refined());
        for (int k = 0; k <= n; ++k) {
            if (lah_brute(n, k, WeightSpec::generic()) != gen.at(n, k)) return false;
            if (lah_brute(n, k, WeightSpec::refined()) != ref.at(n, k)) return false;
        }
        for (int k = (n == 0 ? 0 : 1); k <= n; ++k) {
            bool ok = true;
            enumerate_increasing_forests(n, k, true, [&](const Forest& f) {
                if (!(path_to_forest(forest_to_path(f)) == f)) ok = false;
            });
            if (!ok) return false;
        }
    }
    return true;
}

bool crit4_theorem_1_5(std::string&) {
    for (int r = 1; r <= 3; ++r) {
        PolyMatrix tri = lah_triangle(6, WeightSpec::elementary(r));
        auto rows = row_generating(tri);
        for (int n = 0; n <= 6; ++n) {
            MPoly via_paths = sr_poly(r, n, AlphaSeq::lah(r));
            MPoly via_diffop = lah_via_diffop(r, DiffSign::Plus, n);
            MPoly via_euler_gauss = euler_gauss_g(r, 0, n);
            if (via_paths != rows[n]) return false;
            if (via_diffop != rows[n]) return false;
            if (via_euler_gauss != rows[n]) return false;
        }
    }
    return true;
}

bool crit5_total_positivity(std::string& note) {
    auto binom2 = scalar_phi([](int i) { return Scalar(binomial(2, i)); });
    auto h11 = scalar_phi([](int i) { return Scalar(i + 1); }); // h_i(1,1)

    for (const auto& bind : {binom2, h11}) {
        PolyMatrix tri = substitute_all(lah_triangle(6, WeightSpec::generic()), bind);
        if (!tp_check(tri, 3).pass) return false;
        auto rows = row_generating(tri); // 7 entries: Hankel size 4
        if (!seq_tp_check(rows, SeqMatrixKind::Hankel, 3, 4).pass) return false;
    }

    // Lemma: H(O_0(P)) = O(P) O(P^T)^T entrywise on 3x3, generic weights,
    // on the y-modified production matrix (whose zeroth column is alive).
    {
        const int m = 10, hsize = 3;
        PolyMatrix p =
            build_production_matrix(WeightSpec::generic(), ProdMatKind::Generic, m);
        PolyMatrix shift(m, m);
        for (int i = 0; i < m; ++i) {
            shift.at(i, i) = MPoly(1);
            if (i + 1 < m) shift.at(i + 1, i) = MPoly(Var::y());
        }
        PolyMatrix py = p * shift;
        PolyMatrix lhs =
            seq_matrix(output_column0(py, 2 * hsize - 1), SeqMatrixKind::Hankel, hsize);
        PolyMatrix a = output_matrix(py, hsize);
        PolyMatrix at = output_matrix_of_transpose(py, hsize);
        for (int i = 0; i < hsize; ++i)
            for (int j = 0; j < hsize; ++j) {
                MPoly acc;
                for (int k = 0; k < m; ++k) acc += a.at(i, k) * at.at(j, k);
                if (acc != lhs.at(i, j)) return false;
            }
    }

    // Transfer theorems across the production-matrix corpus: P TP_3 implies
    // O(P) TP_3 and Hankel(O_0(P)) TP_3.
    std::vector<PolyMatrix> corpus;
    corpus.push_back(substitute_all(
        build_production_matrix(WeightSpec::generic(), ProdMatKind::Generic, 7), binom2));
    corpus.push_back(substitute_all(
        build_production_matrix(WeightSpec::generic(), ProdMatKind::Generic, 7), h11));
    {
        // refined phi*c weights at phi_i = C(2,i), symbolic c
        PolyMatrix pc = substitute_all(
            build_production_matrix(WeightSpec::phi_times_c(), ProdMatKind::Refined, 7),
            binom2);
        corpus.push_back(pc);
        // y-modified matrix, coefficientwise in y
        PolyMatrix base = substitute_all(
            build_production_matrix(WeightSpec::generic(), ProdMatKind::Generic, 7),
            binom2);
        PolyMatrix shift(7, 7);
        for (int i = 0; i < 7; ++i) {
            shift.at(i, i) = MPoly(1);
            if (i + 1 < 7) shift.at(i + 1, i) = MPoly(Var::y());
        }
        corpus.push_back(base * shift);
        // branched S-fraction production matrices at small integer alphas
        std::vector<MPoly> vals;
        for (int i = 0; i < 40; ++i) vals.push_back(MPoly(1 + i % 2));
        corpus.push_back(sfrac_production_matrix(1, AlphaSeq::values(1, vals), 7));
        corpus.push_back(sfrac_production_matrix(2, AlphaSeq::values(2, vals), 7));
    }
    int checked = 0;
    for (const auto& p : corpus) {
        if (!tp_check(p, 3).pass) return false;
        if (!tp_check(output_matrix(p, p.rows()), 3).pass) return false;
        auto col0 = output_column0(p, 7);
        if (!seq_tp_check(col0, SeqMatrixKind::Hankel, 3, 4).pass) return false;
        ++checked;
    }
    note = "corpus of " + std::to_string(checked) + " production matrices transferred";
    return true;
}

bool crit6_conjugation_riordan(std::string&) {
    if (!verify_conjugation(8).ok) return false;

    std::vector<MPoly> a;
    for (int i = 0; i <= 8; ++i) a.push_back(MPoly(Var::phi(i)));
    if (!(riordan_production(a, {}, 8) ==
          build_production_matrix(WeightSpec::generic(), ProdMatKind::Generic, 8)))
        return false;

    for (int r = 1; r <= 2; ++r) {
        PSeries phi(6);
        for (int i = 0; i <= 6; ++i) phi.coeff(i) = elementary_sym(i, r);
        PSeries u = ode_solve_autonomous(phi, 6);
        PolyMatrix rr = riordan_array(PSeries::one(6), u, 7);
        if (!(rr == lah_triangle(6, WeightSpec::elementary(r)))) return false;
    }
    return true;
}

bool crit7_closed_forms(std::string& note) {
    std::map<Var, MPoly> ones, invfact;
    for (int i = 1; i <= 20; ++i) {
        ones[Var::phi(i)] = MPoly(1);
        invfact[Var::phi(i)] = MPoly(Scalar(Integer(1), factorial(i)));
    }
    std::function<Integer(int, int)> cyc = [&](int n, int k) -> Integer {
        if (n == 0 && k == 0) return 1;
        if (n == 0 || k == 0 || k > n) return 0;
        return cyc(n - 1, k - 1) + Integer(n - 1) * cyc(n - 1, k);
    };
    for (int n = 1; n <= 7; ++n)
        for (int k = 1; k <= n; ++k) {
            Integer denom = factorial(n - k) * factorial(k - 1);
            mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), n - k);
            Integer bessel = factorial(2 * n - k - 1) / denom;
            if (lagrange_lah(n, k, ones) != MPoly(Scalar(bessel))) return false;
            if (lagrange_lah(n, k, invfact) != MPoly(Scalar(cyc(n, k)))) return false;
        }

    // the two large coefficients, via the production-matrix route
    std::map<Var, MPoly> phi0_one = {{Var::phi(0), MPoly(1)}};
    PolyMatrix tri = lah_triangle(13, WeightSpec::generic());
    MPoly l11 = tri.at(11, 1).substitute(phi0_one);
    MPoly l13 = tri.at(13, 1).substitute(phi0_one);
    Monomial m11 = Monomial::from_factors(
        {{Var::phi(1), 2}, {Var::phi(2), 1}, {Var::phi(3), 2}});
    Monomial m13 = Monomial::from_factors(
        {{Var::phi(1), 3}, {Var::phi(2), 3}, {Var::phi(3), 1}});
    if (l11.coefficient(m11) != Scalar(Integer("24950808"))) return false;
    if (l13.coefficient(m13) != Scalar(Integer("2318149824"))) return false;
    note = "coefficients 24950808 and 2318149824 reproduced";
    return true;
}

bool crit8_search(std::string& note) {
    // Catalan witness in < 1 s
    auto t0 = std::chrono::steady_clock::now();
    SfracSearchResult cat = sfrac_search({1, 1, 2, 5, 14}, 1, 20);
    double cat_sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool cat_ok = cat.status == SfracSearchResult::Status::Found && cat_sec < 1.0;
    for (int i = 1; i <= 4 && cat_ok; ++i) cat_ok = cat.alpha[i] == 1;

    // As stated: depth n <= 6, bound 20 must certify exhaustion.
    std::vector<std::int64_t> truncated = {1, 1, 2, 7, 37, 266, 2431};
    SfracSearchResult shallow = sfrac_search(truncated, 2, 20);
    bool stated_ok = shallow.status == SfracSearchResult::Status::Exhausted;

    // Supplementary: the full-depth instance (n <= 7), which is the
    // sequence the non-existence statement is actually about.
    SfracSearchResult deep = sfrac_search({1, 1, 2, 7, 37, 266, 2431, 27007}, 2, 20);
    bool deep_ok = deep.status == SfracSearchResult::Status::Exhausted;

    note = std::string("catalan witness ") + (cat_ok ? "found" : "MISSING");
    if (!stated_ok) {
        note += "; depth-6 clause fails: witness alpha_2.. = (";
        for (size_t i = 2; i < shallow.alpha.size(); ++i)
            note += (i > 2 ? "," : "") + std::to_string(shallow.alpha[i]);
        note += ") reproduces the truncated sequence";
    }
    note += std::string("; full depth n<=7: ") +
            (deep_ok ? "exhausted, no witness" : "UNEXPECTED witness");
    return cat_ok && stated_ok && deep_ok;
}

} // namespace

int main() {
    criterion(1, "generic Lah triangle matches the reference table (n <= 7)",
              crit1_appendix_a1);
    criterion(2, "symmetric-function tables match the reference tables (n <= 7)",
              crit2_appendix_a2_a3);
    criterion(3, "forest oracle equals the production-matrix triangle; bijection "
                 "round-trips (n <= 6)",
              crit3_oracle_and_bijection);
    criterion(4, "branched S-fraction = row polynomials = differential operator = "
                 "Euler-Gauss (r <= 3, n <= 6)",
              crit4_theorem_1_5);
    criterion(5, "total positivity of order 3: triangles, Hankel sequences, "
                 "transfer, Hankel identity",
              crit5_total_positivity);
    criterion(6, "conjugation identity (8x8) and Riordan-array identities",
              crit6_conjugation_riordan);
    criterion(7, "closed forms for n <= 7 and the two large coefficients in rows "
                 "11 and 13",
              crit7_closed_forms);
    criterion(8, "S-fraction search: Catalan witness and negative-type exhaustion",
              crit8_search);
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all criteria passed\n");
    return failures;
}
