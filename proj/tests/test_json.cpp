#include "doctest.h"
#include "lahkit/appendix.hpp"
#include "lahkit/json_io.hpp"

using namespace lahkit;

TEST_CASE("mpoly json round trip and canonical order") {
    MPoly p = parse_phi_poly("7*phi1^2 + 8*phi2") - MPoly(Scalar(Integer(1), Integer(2)));
    json j = mpoly_to_json(p);
    CHECK(mpoly_from_json(j) == p);
    // canonical order: highest grlex first
    CHECK(j[0]["monomial"] == json({{"phi1", 2}}));
    CHECK(j[0]["coeff"] == "7");
    CHECK(j[2]["coeff"] == "-1/2");
    CHECK(j[2]["monomial"].empty());

    // byte-determinism of the serialization
    CHECK(mpoly_to_json(p).dump() == mpoly_to_json(p).dump());
    CHECK(mpoly_to_json(MPoly()) == json::array());
}

TEST_CASE("forest and path json") {
    Forest f(3);
    f.roots = {1};
    f.children[1] = {2, 3};
    json j = forest_to_json(f);
    CHECK(j["n"] == 3);
    CHECK(forest_from_json(j) == f);

    LukPath p{1, {1, -1, -1}, {1, 1, 1}};
    CHECK(path_from_json(path_to_json(p)) == p);

    json broken = path_to_json(p);
    broken["labels"][0] = 5;
    CHECK_THROWS_AS(path_from_json(broken), invalid_path);

    json badf = forest_to_json(f);
    badf["roots"] = {2};
    CHECK_THROWS_AS(forest_from_json(badf), domain_error);
}

TEST_CASE("tp report json carries the witness") {
    PolyMatrix bad(2, 2);
    bad.at(0, 0) = MPoly(1);
    bad.at(0, 1) = MPoly(1);
    bad.at(1, 0) = MPoly(2);
    bad.at(1, 1) = MPoly(1);
    TPReport rep = tp_check(bad, 2);
    json j = tp_report_to_json(rep);
    CHECK(j["status"] == "fail");
    CHECK(j["witness"]["rows"] == json({0, 1}));
    CHECK(j["witness"]["coeff"] == "-1");

    // reproducing the cited minor from the witness gives the same value
    auto rows = j["witness"]["rows"].get<std::vector<int>>();
    auto cols = j["witness"]["cols"].get<std::vector<int>>();
    CHECK(minor_det(bad, rows, cols) == rep.witness->minor_value);
}

TEST_CASE("csv export") {
    PolyMatrix m(2, 2);
    m.at(0, 0) = MPoly(1);
    m.at(1, 1) = MPoly(Scalar(Integer(3), Integer(2)));
    CHECK(triangle_to_csv(m) == "1,0\n0,3/2\n");
    m.at(1, 0) = MPoly(Var::y());
    CHECK_THROWS_AS(triangle_to_csv(m), domain_error);
}

TEST_CASE("series json") {
    PSeries s(2);
    s.coeff(0) = MPoly(1);
    s.coeff(2) = MPoly(Var::phi(1));
    json j = series_to_json(s);
    CHECK(j["var"] == "t");
    CHECK(j["egf"] == false);
    CHECK(j["coeffs"].size() == 3);
}
