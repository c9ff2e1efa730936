#include "doctest.h"
#include "lahkit/appendix.hpp"
#include "lahkit/forest.hpp"
#include "lahkit/prodmat.hpp"

using namespace lahkit;

namespace {

// Set-partition polynomial P_n(y, w) of weighted partitions: each block of
// size m carries y * w_m.  Independent oracle for the composition identity.
MPoly partition_poly(int n, const std::vector<MPoly>& w) {
    MPoly total;
    MPoly y(Var::y());
    enumerate_set_partitions(n, [&](const std::vector<std::vector<int>>& blocks) {
        MPoly weight(1);
        for (auto& b : blocks) weight *= y * w[b.size()];
        total += weight;
    });
    if (n == 0) total = MPoly(1);
    return total;
}

Forest chain2() {
    Forest f(2);
    f.roots = {1};
    f.children[1] = {2};
    return f;
}

Forest two_singletons() {
    Forest f(2);
    f.roots = {1, 2};
    return f;
}

} // namespace

TEST_CASE("forest enumeration counts") {
    // empty forest
    auto empty = list_increasing_forests(0, 0, false);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].n == 0);

    // L_{3,1}(1) = 3 unordered trees on [3]
    CHECK(list_increasing_forests(3, 1, false).size() == 3);

    // L_{5,1}(1) = 105
    CHECK(list_increasing_forests(5, 1, false).size() == 105);

    // ordered = k! * unordered
    for (int n = 0; n <= 5; ++n)
        for (int k = 0; k <= n; ++k) {
            auto uo = list_increasing_forests(n, k, false).size();
            auto od = list_increasing_forests(n, k, true).size();
            CHECK(od == uo * factorial(k).get_ui());
        }

    CHECK_THROWS_AS(list_increasing_forests(9, 1, false), cap_exceeded);
    CHECK_THROWS_AS(list_increasing_forests(3, 4, false), domain_error);
}

TEST_CASE("forest count closed form") {
    // unordered count at phi = 1 equals (2n-k-1)! / (2^{n-k} (n-k)! (k-1)!)
    for (int n = 1; n <= 7; ++n)
        for (int k = 1; k <= n; ++k) {
            Integer expect = factorial(2 * n - k - 1);
            Integer denom = factorial(n - k) * factorial(k - 1);
            mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), n - k);
            expect /= denom;
            long count = 0;
            enumerate_increasing_forests(n, k, false, [&](const Forest&) { ++count; });
            CHECK(Integer(count) == expect);
        }
}

TEST_CASE("vertex level") {
    Forest chain = chain2();
    CHECK(vertex_level(chain, 1) == 1);
    CHECK(vertex_level(chain, 2) == 1);

    Forest singles = two_singletons();
    CHECK(vertex_level(singles, 1) == 2);
    CHECK(vertex_level(singles, 2) == 1);

    CHECK_THROWS_AS(vertex_level(chain, 3), domain_error);

    // the last vertex in the last tree with no straddling children sits at
    // level 1
    enumerate_increasing_forests(4, 2, false, [&](const Forest& f) {
        int straddle = 0;
        for (int v = 1; v < f.n; ++v)
            for (int c : f.children[v])
                if (c > f.n) ++straddle;
        if (straddle == 0) CHECK(vertex_level(f, f.n) == 1);
    });
}

TEST_CASE("lah_brute against reference cells") {
    std::map<Var, MPoly> phi0_one = {{Var::phi(0), MPoly(1)}};

    MPoly l42 = lah_brute(4, 2, WeightSpec::generic()).substitute(phi0_one);
    MPoly expect42 = parse_phi_poly("7*phi1^2 + 8*phi2");
    CHECK(l42 == expect42);

    MPoly l73 = lah_brute(7, 3, WeightSpec::generic()).substitute(phi0_one);
    CHECK(l73 == parse_phi_poly("301*phi1^4 + 1792*phi1^2*phi2 + 616*phi2^2 + "
                                "1512*phi1*phi3 + 504*phi4"));

    // n = k: the all-singletons forest contributes phi0^[1] ... phi0^[k]
    MPoly diag = lah_brute(3, 3, WeightSpec::refined());
    MPoly expect_diag =
        MPoly(Var::phiL(0, 1)) * MPoly(Var::phiL(0, 2)) * MPoly(Var::phiL(0, 3));
    CHECK(diag == expect_diag);

    // and 1 after normalizing all phi0 levels away
    MPoly diag_gen = lah_brute(3, 3, WeightSpec::generic()).substitute(phi0_one);
    CHECK(diag_gen == MPoly(1));
}

TEST_CASE("lah_brute homogeneity") {
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= n; ++k) {
            MPoly p = lah_brute(n, k, WeightSpec::generic());
            for (auto& [mono, c] : p.terms()) {
                int deg = 0, quasi = 0;
                for (auto& [v, e] : mono.factors()) {
                    deg += e;
                    quasi += v.index * e;
                }
                CHECK(deg == n);        // homogeneous of degree n
                CHECK(quasi == n - k);  // quasi-homogeneous with phi_i of weight i
            }
        }
}

TEST_CASE("composition identity with set-partition polynomial") {
    // L_n(phi, y) = P_n(y, w) with w_m = L_{m,1}(phi)
    const int n_max = 6;
    std::vector<MPoly> w(n_max + 1);
    for (int m = 1; m <= n_max; ++m) w[m] = lah_brute(m, 1, WeightSpec::generic());
    MPoly y(Var::y());
    for (int n = 0; n <= n_max; ++n) {
        MPoly lhs;
        MPoly ypow(1);
        for (int k = 0; k <= n; ++k) {
            lhs += lah_brute(n, k, WeightSpec::generic()) * ypow;
            ypow *= y;
        }
        CHECK(lhs == partition_poly(n, w));
    }
}

TEST_CASE("forest to path examples") {
    LukPath p = forest_to_path(chain2());
    CHECK(p.start_height == 1);
    CHECK(p.steps == std::vector<int>{0, -1});
    CHECK(p.heights() == std::vector<int>{1, 1, 0});
    CHECK(p.labels == std::vector<int>{1, 1});

    LukPath q = forest_to_path(two_singletons());
    CHECK(q.start_height == 2);
    CHECK(q.steps == std::vector<int>{-1, -1});
    CHECK(q.heights() == std::vector<int>{2, 1, 0});
    CHECK(q.labels == std::vector<int>{1, 1});

    Forest empty(0);
    LukPath e = forest_to_path(empty);
    CHECK(e.start_height == 0);
    CHECK(e.steps.empty());
}

TEST_CASE("path to forest examples") {
    LukPath p{1, {0, -1}, {1, 1}};
    CHECK(path_to_forest(p) == chain2());

    LukPath q{1, {1, -1, -1}, {1, 1, 1}};
    Forest expect(3);
    expect.roots = {1};
    expect.children[1] = {2, 3};
    CHECK(path_to_forest(q) == expect);

    LukPath empty{0, {}, {}};
    CHECK(path_to_forest(empty).n == 0);

    // invariant violations
    CHECK_THROWS_AS(path_to_forest(LukPath{1, {-1, 0}, {1, 1}}), invalid_path);
    CHECK_THROWS_AS(path_to_forest(LukPath{1, {0, -1}, {2, 1}}), invalid_path);
    CHECK_THROWS_AS(path_to_forest(LukPath{2, {0, -1}, {1, 1}}), invalid_path);
}

TEST_CASE("bijection round-trips exhaustively for n <= 6") {
    for (int n = 0; n <= 6; ++n)
        for (int k = (n == 0 ? 0 : 1); k <= n; ++k) {
            enumerate_increasing_forests(n, k, /*ordered=*/true, [&](const Forest& f) {
                LukPath p = forest_to_path(f);
                p.validate();
                CHECK(path_to_forest(p) == f);
            });
        }
}

TEST_CASE("bijection transports weights") {
    // Summing the refined forest weight over the ordered forests that share
    // a step sequence must equal prod_j h_{j-1} phi_{s_j+1}^[h_{j-1}].
    const int n = 5;
    for (int k = 1; k <= n; ++k) {
        std::map<std::vector<int>, MPoly> by_path;
        enumerate_increasing_forests(n, k, true, [&](const Forest& f) {
            LukPath p = forest_to_path(f);
            MPoly w(1);
            for (int v = 1; v <= n; ++v)
                w *= MPoly(Var::phiL(f.degree(v), vertex_level(f, v)));
            by_path[p.steps] += w;
        });
        for (auto& [steps, total] : by_path) {
            LukPath p{k, steps, std::vector<int>(steps.size(), 1)};
            auto h = p.heights();
            MPoly expect(1);
            for (size_t j = 0; j < steps.size(); ++j)
                expect *= Scalar(h[j]) * MPoly(Var::phiL(steps[j] + 1, h[j]));
            CHECK(total == expect);
        }
    }
}

TEST_CASE("stirling generating polynomials") {
    // r = 1, n = 3: homogenized Bell, B_3 = y + 3y^2 + y^3
    MPoly g13 = stirling_genpoly(3, 1);
    CHECK(g13 == parse_phi_poly("x1^2*y + 3*x1*y^2 + y^3"));

    // r = 2, n = 2: lists with ascent/descent statistics
    MPoly g22 = stirling_genpoly(2, 2);
    CHECK(g22 == parse_phi_poly("y^2 + x1*y + x2*y"));

    // n = 0: the empty partition
    CHECK(stirling_genpoly(0, 3) == MPoly(1));

    CHECK_THROWS_AS(stirling_genpoly(8, 2), cap_exceeded);
}

TEST_CASE("stirling word check") {
    CHECK(is_stirling_word({1, 2, 2, 1}));
    CHECK_FALSE(is_stirling_word({2, 1, 2}));
    CHECK(is_stirling_word({}));
    CHECK(is_stirling_word({1, 1}));
}

TEST_CASE("decorated set partitions") {
    // every visited object is valid, and the count per block multiplies the
    // multifactorials F_b^{(copies)}
    long count = 0;
    enumerate_stirling_set_partitions(3, 2, [&](const StirlingSetPartition& sp) {
        ++count;
        CHECK(sp.valid(2));
    });
    // partitions of {1,2,3}: 123 | 12/3 | 13/2 | 23/1 | 1/2/3 with
    // F_3^(2) = 15 decorations for the 3-block, F_2^(2) = 3 for 2-blocks
    CHECK(count == 15 + 3 * 3 + 1);

    StirlingSetPartition bad;
    bad.blocks = {{1, 2}};
    bad.decorations = {{2, 1, 2}};
    CHECK_FALSE(bad.valid(2)); // word 212 violates the Stirling condition
    bad.decorations = {{1, 2, 2}};
    CHECK_FALSE(bad.valid(2)); // letter 1 appears once, not twice
}

TEST_CASE("stirling genpoly cross-validates against the triangle") {
    for (int r = 1; r <= 3; ++r)
        for (int n = 0; n <= 5; ++n) {
            PolyMatrix tri = lah_triangle(n, WeightSpec::elementary(r));
            auto rows = row_generating(tri);
            CHECK(stirling_genpoly(n, r) == rows[n]);
        }
}
