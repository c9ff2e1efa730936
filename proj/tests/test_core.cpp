#include <random>

#include "doctest.h"
#include "lahkit/mpoly.hpp"
#include "lahkit/scalar.hpp"

using namespace lahkit;

namespace {

MPoly phi(int i) { return MPoly(Var::phi(i)); }
MPoly x(int i) { return MPoly(Var::x(i)); }

// Small random polynomial over phi_0..phi_2, x_1, y with coefficients in
// [-3, 3]; used by the ring-axiom property tests.
MPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), coeff(-3, 3), exp(0, 2), pick(0, 4);
    Var vars[] = {Var::phi(0), Var::phi(1), Var::phi(2), Var::x(1), Var::y()};
    MPoly p;
    int m = nterms(rng);
    for (int i = 0; i < m; ++i) {
        std::vector<std::pair<Var, int>> fac;
        for (Var v : vars)
            if (pick(rng) < 2) {
                int e = exp(rng);
                if (e > 0) fac.emplace_back(v, e);
            }
        p += MPoly(Monomial::from_factors(fac), Scalar(coeff(rng)));
    }
    return p;
}

} // namespace

TEST_CASE("scalar arithmetic and canonical form") {
    Scalar half(Integer(2), Integer(4));
    CHECK(half.to_string() == "1/2");
    CHECK(half.numerator() == 1);
    CHECK(half.denominator() == 2);
    Scalar neg(Integer(-6), Integer(4));
    CHECK(neg.to_string() == "-3/2");
    CHECK((half + half).is_one());
    CHECK(Scalar::from_string("7/2") == Scalar(Integer(7), Integer(2)));
    CHECK(Scalar::from_string("-12") == Scalar(-12));
    CHECK_THROWS_AS(Scalar(Integer(1), Integer(0)), domain_error);
    CHECK(Scalar().is_zero());
    CHECK(Scalar().denominator() == 1);
}

TEST_CASE("combinatorial scalars") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(4) == 24);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 7) == 0);
    // F_4^(1) = 1*2*3*4 = 4!
    CHECK(multifactorial(4, 1) == 24);
    // F~_3^(2) = 1*3*5 = (2n-3)!! at n = 4
    CHECK(shifted_multifactorial(3, 2) == 15);
    CHECK(multifactorial(0, 3) == 1);
    CHECK(rising_product(1, 4) == 24); // 4!/0!
    CHECK(rising_product(3, 5) == 60); // 5!/2!
    CHECK(rising_product(5, 4) == 1);  // j = i+1 empty product
    CHECK_THROWS_AS(factorial(-1), domain_error);
    CHECK_THROWS_AS(multifactorial(-2, 1), domain_error);
    CHECK(comb_scalar("binomial", {5, 2}) == Scalar(10));
    CHECK(comb_scalar("multifactorial", {4, 1}) == Scalar(24));
    CHECK(comb_scalar("shifted-multifactorial", {3, 2}) == Scalar(15));
    CHECK_THROWS_AS(comb_scalar("nope", {1}), domain_error);
}

TEST_CASE("variable order and names") {
    CHECK(Var::phi(0) < Var::phi(1));
    CHECK(Var::phi(7) < Var::phiL(0, 1));
    CHECK(Var::phiL(0, 1) < Var::phiL(0, 2));
    CHECK(Var::phiL(3, 9) < Var::x(1));
    CHECK(Var::x(2) < Var::y());
    CHECK(Var::y() < Var::c(1));
    CHECK(Var::c(5) < Var::t());
    CHECK(Var::t() < Var::alpha(0));

    CHECK(Var::phiL(2, 3).name() == "phi2[3]");
    CHECK(parse_var("phi2[3]") == Var::phiL(2, 3));
    CHECK(parse_var("x4") == Var::x(4));
    CHECK(parse_var("alpha12") == Var::alpha(12));
    CHECK(parse_var("y") == Var::y());
    CHECK_THROWS_AS(parse_var("z1"), unknown_name);
    CHECK_THROWS_AS(parse_var("phi"), unknown_name);
    CHECK_THROWS_AS(parse_var("x0"), unknown_name);
}

TEST_CASE("poly arithmetic basics") {
    // add(phi_1, phi_1) = 2 phi_1
    CHECK(phi(1) + phi(1) == Scalar(2) * phi(1));
    // (phi_1 + 1)(phi_1 - 1) = phi_1^2 - 1
    CHECK((phi(1) + MPoly(1)) * (phi(1) - MPoly(1)) == phi(1) * phi(1) - MPoly(1));
    // (x_1 + x_2)^2 = x_1^2 + 2 x_1 x_2 + x_2^2
    MPoly sq = (x(1) + x(2)) * (x(1) + x(2));
    MPoly expect = x(1) * x(1) + Scalar(2) * x(1) * x(2) + x(2) * x(2);
    CHECK(sq == expect);
    CHECK(sq.term_count() == 3);
    CHECK((phi(1) - phi(1)).is_zero());
    CHECK(MPoly().total_degree() == -1);
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(20240811);
    for (int it = 0; it < 200; ++it) {
        MPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * MPoly(1) == a);
        CHECK((a * MPoly()).is_zero());
    }
}

TEST_CASE("substitution") {
    // L_{3,1} = phi_1^2 + 2 phi_2 at phi_1 -> x_1, phi_2 -> x_1^2 gives 3 x_1^2
    MPoly l31 = phi(1) * phi(1) + Scalar(2) * phi(2);
    MPoly sub = l31.substitute({{Var::phi(1), x(1)}, {Var::phi(2), x(1) * x(1)}});
    CHECK(sub == Scalar(3) * x(1) * x(1));

    // identity on untouched variables
    MPoly y(Var::y());
    CHECK(y.substitute({}) == y);

    // L_{4,2} = 7 phi_1^2 + 8 phi_2 at phi_i -> 1/i! gives 11
    MPoly l42 = Scalar(7) * phi(1) * phi(1) + Scalar(8) * phi(2);
    MPoly val = l42.substitute({{Var::phi(1), MPoly(Scalar(1))},
                                {Var::phi(2), MPoly(Scalar(Integer(1), Integer(2)))}});
    CHECK(val == MPoly(11));

    // named interface validates the alphabet
    CHECK(substitute_named(l31, {{"phi1", MPoly(1)}, {"phi2", MPoly(1)}}) == MPoly(3));
    CHECK_THROWS_AS(substitute_named(l31, {{"bogus", MPoly(1)}}), unknown_name);
}

TEST_CASE("substitution is a ring homomorphism") {
    std::mt19937 rng(777);
    std::map<Var, MPoly> bind = {{Var::phi(1), x(1) + MPoly(1)},
                                 {Var::phi(2), x(1) * x(1)},
                                 {Var::y(), MPoly(2)}};
    for (int it = 0; it < 100; ++it) {
        MPoly a = random_poly(rng), b = random_poly(rng);
        CHECK((a * b).substitute(bind) == a.substitute(bind) * b.substitute(bind));
        CHECK((a + b).substitute(bind) == a.substitute(bind) + b.substitute(bind));
    }
}

TEST_CASE("coefficientwise nonnegativity") {
    MPoly p = phi(1) * phi(1) + Scalar(2) * phi(2);
    CHECK(p.is_coeffwise_nonneg());

    // (1-x)^2 = 1 - 2x + x^2 is not >= 0
    MPoly q = MPoly(1) - Scalar(2) * x(1) + x(1) * x(1);
    std::optional<std::pair<Monomial, Scalar>> witness;
    CHECK_FALSE(q.is_coeffwise_nonneg(&witness));
    REQUIRE(witness.has_value());
    CHECK(witness->first == Monomial(Var::x(1)));
    CHECK(witness->second == Scalar(-2));

    CHECK(MPoly().is_coeffwise_nonneg());
}

TEST_CASE("nonnegativity is compatible with products") {
    std::mt19937 rng(99);
    auto random_nonneg = [&]() {
        MPoly p = random_poly(rng);
        MPoly q;
        for (auto& [m, c] : p.terms())
            q += MPoly(m, c.sign() < 0 ? -c : c);
        return q;
    };
    for (int it = 0; it < 100; ++it) {
        MPoly a = random_nonneg(), b = random_nonneg();
        CHECK((a * b).is_coeffwise_nonneg());
        CHECK((a + b).is_coeffwise_nonneg());
    }
}

TEST_CASE("exact division") {
    MPoly a = (phi(1) + phi(2)) * (phi(1) - Scalar(3) * phi(3)) * (x(1) + MPoly(2));
    CHECK(a.divide_exact(phi(1) + phi(2)) ==
          (phi(1) - Scalar(3) * phi(3)) * (x(1) + MPoly(2)));
    CHECK_THROWS_AS(phi(1).divide_exact(phi(2)), domain_error);
    CHECK_THROWS_AS(phi(1).divide_exact(MPoly()), domain_error);
}

TEST_CASE("derivative") {
    MPoly p = x(1) * x(1) * x(2) + Scalar(3) * x(2);
    CHECK(p.derivative(Var::x(1)) == Scalar(2) * x(1) * x(2));
    CHECK(p.derivative(Var::x(2)) == x(1) * x(1) + MPoly(3));
    CHECK(p.derivative(Var::y()).is_zero());
}

TEST_CASE("serialization order is canonical") {
    MPoly p = phi(6) + Scalar(114) * phi(1).pow(4) * phi(2) + phi(1).pow(6);
    // grlex-descending: phi1^6 (deg 6) first, then phi1^4 phi2 (deg 5), then phi6
    CHECK(p.to_string() == "phi1^6 + 114*phi1^4*phi2 + phi6");
    // table order: ascending from the highest variable
    CHECK(p.pretty() == "phi_1^6 + 114 phi_1^4 phi_2 + phi_6");
    CHECK(MPoly().to_string() == "0");
    MPoly q = -phi(1) + MPoly(2);
    CHECK(q.to_string() == "-phi1 + 2");
}
