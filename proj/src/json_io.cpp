#include "lahkit/json_io.hpp"

#include <sstream>

namespace lahkit {

json mpoly_to_json(const MPoly& p) {
    json arr = json::array();
    for (auto& [m, c] : p.terms()) {
        json mono = json::object();
        for (auto& [v, e] : m.factors()) mono[v.name()] = e;
        arr.push_back({{"coeff", c.to_string()}, {"monomial", mono}});
    }
    return arr;
}

MPoly mpoly_from_json(const json& j) {
    MPoly p;
    for (auto& term : j) {
        Scalar c = Scalar::from_string(term.at("coeff").get<std::string>());
        std::vector<std::pair<Var, int>> fac;
        for (auto& [name, e] : term.at("monomial").items())
            fac.emplace_back(parse_var(name), e.get<int>());
        p += MPoly(Monomial::from_factors(std::move(fac)), c);
    }
    return p;
}

json matrix_to_json(const PolyMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(mpoly_to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json triangle_to_json(const PolyMatrix& tri, int n_max, const std::string& weights) {
    return {{"n_max", n_max}, {"weights", weights}, {"cells", matrix_to_json(tri)}};
}

std::string triangle_to_csv(const PolyMatrix& tri) {
    std::ostringstream out;
    for (int i = 0; i < tri.rows(); ++i) {
        for (int j = 0; j < tri.cols(); ++j) {
            if (j) out << ",";
            const MPoly& cell = tri.at(i, j);
            if (!cell.is_constant())
                throw domain_error("triangle_to_csv: non-scalar cell at (" +
                                   std::to_string(i) + "," + std::to_string(j) + ")");
            out << cell.constant_term().to_string();
        }
        out << "\n";
    }
    return out.str();
}

json forest_to_json(const Forest& f) {
    json children = json::object();
    for (int v = 1; v <= f.n; ++v)
        if (!f.children[v].empty()) children[std::to_string(v)] = f.children[v];
    return {{"n", f.n}, {"roots", f.roots}, {"children", children}};
}

Forest forest_from_json(const json& j) {
    Forest f(j.at("n").get<int>());
    f.roots = j.at("roots").get<std::vector<int>>();
    for (auto& [key, kids] : j.at("children").items()) {
        int v = std::stoi(key);
        if (v < 1 || v > f.n) throw domain_error("forest_from_json: bad vertex id");
        f.children[v] = kids.get<std::vector<int>>();
    }
    if (!f.valid()) throw domain_error("forest_from_json: not an increasing forest");
    return f;
}

json path_to_json(const LukPath& p) {
    return {{"start_height", p.start_height}, {"steps", p.steps}, {"labels", p.labels}};
}

LukPath path_from_json(const json& j) {
    LukPath p;
    p.start_height = j.at("start_height").get<int>();
    p.steps = j.at("steps").get<std::vector<int>>();
    p.labels = j.at("labels").get<std::vector<int>>();
    p.validate();
    return p;
}

json tp_report_to_json(const TPReport& r) {
    json j = {{"order", r.order}, {"status", r.pass ? "pass" : "fail"}};
    if (r.remaining > 0) j["minors_remaining"] = r.remaining;
    if (r.witness) {
        json mono = json::object();
        for (auto& [v, e] : r.witness->monomial.factors()) mono[v.name()] = e;
        j["witness"] = {{"rows", r.witness->rows},
                        {"cols", r.witness->cols},
                        {"monomial", mono},
                        {"coeff", r.witness->coeff.to_string()},
                        {"minor", mpoly_to_json(r.witness->minor_value)}};
    }
    return j;
}

json series_to_json(const PSeries& s) {
    json coeffs = json::array();
    for (auto& c : s.coeffs()) coeffs.push_back(mpoly_to_json(c));
    return {{"var", "t"}, {"egf", s.egf()}, {"coeffs", coeffs}};
}

json mbasis_to_json(const MBasisExpr& e) {
    json arr = json::array();
    for (auto& [lam, c] : e.coeffs)
        arr.push_back({{"lambda", lam.parts}, {"coeff", c.to_string()}});
    return arr;
}

json symfun_table_to_json(const LahSymfunTable& t) {
    json cells = json::object();
    for (int n = 1; n <= t.n_max; ++n)
        for (int k = 1; k <= n; ++k)
            cells[std::to_string(n) + "," + std::to_string(k)] =
                mbasis_to_json(t.at(n, k));
    return {{"sign", t.sign == LahSign::Plus ? "+" : "-"}, {"cells", cells}};
}

json sr_result_to_json(int m, int n, const MPoly& p) {
    return {{"m", m}, {"n", n}, {"poly", mpoly_to_json(p)}};
}

} // namespace lahkit
