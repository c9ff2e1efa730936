#pragma once

#include "json.hpp"
#include "lahkit/forest.hpp"
#include "lahkit/latpath.hpp"
#include "lahkit/polymatrix.hpp"
#include "lahkit/pseries.hpp"
#include "lahkit/symfun.hpp"
#include "lahkit/totalpos.hpp"
#include "lahkit/weightspec.hpp"

namespace lahkit {

using json = nlohmann::ordered_json;

// Canonical JSON form of an MPoly: array of {"coeff", "monomial"} objects
// in the canonical (grlex-descending) term order.
json mpoly_to_json(const MPoly& p);
MPoly mpoly_from_json(const json& j);

json matrix_to_json(const PolyMatrix& m);
json triangle_to_json(const PolyMatrix& tri, int n_max, const std::string& weights);
std::string triangle_to_csv(const PolyMatrix& tri); // integer cells only

json forest_to_json(const Forest& f);
Forest forest_from_json(const json& j);
json path_to_json(const LukPath& p);
LukPath path_from_json(const json& j);

json tp_report_to_json(const TPReport& r);

json series_to_json(const PSeries& s);

json mbasis_to_json(const MBasisExpr& e);
json symfun_table_to_json(const LahSymfunTable& t);

json sr_result_to_json(int m, int n, const MPoly& p);

} // namespace lahkit
