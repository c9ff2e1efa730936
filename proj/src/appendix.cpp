#include "lahkit/appendix.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "lahkit/prodmat.hpp"

namespace lahkit {

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_terms(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == '+') {
            out.push_back(strip(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(strip(cur));
    return out;
}

long parse_leading_int(const std::string& s, size_t& pos) {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) return 1;
    return std::stol(s.substr(start, pos - start));
}

} // namespace

MPoly parse_phi_poly(const std::string& text) {
    MPoly p;
    for (const std::string& term : split_terms(text)) {
        if (term.empty()) throw domain_error("parse_phi_poly: empty term");
        size_t pos = 0;
        long coeff = parse_leading_int(term, pos);
        MPoly factor{Scalar(coeff)};
        while (pos < term.size()) {
            if (term[pos] == '*') { ++pos; continue; }
            size_t start = pos;
            while (pos < term.size() && (std::isalnum(static_cast<unsigned char>(term[pos])) ||
                                         term[pos] == '[' || term[pos] == ']'))
                ++pos;
            std::string name = term.substr(start, pos - start);
            int exp = 1;
            if (pos < term.size() && term[pos] == '^') {
                ++pos;
                exp = static_cast<int>(parse_leading_int(term, pos));
            }
            factor *= MPoly::var(parse_var(name), exp);
        }
        p += factor;
    }
    return p;
}

MBasisExpr parse_mbasis(const std::string& text) {
    MBasisExpr e;
    int degree = 0;
    for (const std::string& term : split_terms(text)) {
        if (term.empty()) throw domain_error("parse_mbasis: empty term");
        size_t pos = 0;
        long coeff = parse_leading_int(term, pos);
        Partition lam;
        if (pos < term.size()) {
            if (term[pos] != 'm')
                throw domain_error("parse_mbasis: expected m_lambda in '" + term + "'");
            ++pos;
            std::vector<int> parts;
            while (pos < term.size() && std::isdigit(static_cast<unsigned char>(term[pos])))
                parts.push_back(term[pos++] - '0');
            if (pos != term.size())
                throw domain_error("parse_mbasis: trailing junk in '" + term + "'");
            lam = Partition(parts);
        }
        degree = std::max(degree, lam.size());
        e.coeffs.emplace(lam, Scalar(coeff));
    }
    e.degree = degree;
    return e;
}

namespace {

template <typename CellParser>
void load_table(const std::string& path, int& n_max,
                const CellParser& store) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open golden table: " + path);
    std::string line;
    n_max = 0;
    while (std::getline(in, line)) {
        line = strip(line);
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tag;
        int n, k;
        ls >> tag >> n >> k;
        std::string rest;
        std::getline(ls, rest);
        size_t eq = rest.find('=');
        if (tag != "L" || eq == std::string::npos)
            throw domain_error("bad golden line: " + line);
        store(n, k, strip(rest.substr(eq + 1)));
        n_max = std::max(n_max, n);
    }
}

} // namespace

GoldenGeneric load_golden_generic(const std::string& path) {
    GoldenGeneric g;
    load_table(path, g.n_max, [&](int n, int k, const std::string& body) {
        g.cells[{n, k}] = parse_phi_poly(body);
    });
    return g;
}

GoldenSymfun load_golden_symfun(const std::string& path) {
    GoldenSymfun g;
    load_table(path, g.n_max, [&](int n, int k, const std::string& body) {
        g.cells[{n, k}] = parse_mbasis(body);
    });
    return g;
}

std::string default_data_dir() {
#ifdef LAHKIT_DATA_DIR
    return LAHKIT_DATA_DIR;
#else
    return "data";
#endif
}

DiffReport diff_generic_triangle(const GoldenGeneric& golden, int n_max) {
    DiffReport rep;
    PolyMatrix tri = lah_triangle(n_max, WeightSpec::generic());
    std::map<Var, MPoly> phi0_one = {{Var::phi(0), MPoly(1)}};
    for (auto& [cell, expected] : golden.cells) {
        auto [n, k] = cell;
        if (n > n_max) continue;
        ++rep.cells_checked;
        MPoly computed = tri.at(n, k).substitute(phi0_one);
        if (computed != expected)
            rep.mismatches.push_back(
                {n, k, computed.to_string(), expected.to_string()});
    }
    return rep;
}

DiffReport diff_symfun_table(const GoldenSymfun& golden, LahSign sign, int n_max) {
    DiffReport rep;
    LahSymfunTable table = lah_symfun_table(n_max, sign);
    for (auto& [cell, expected] : golden.cells) {
        auto [n, k] = cell;
        if (n > n_max) continue;
        ++rep.cells_checked;
        const MBasisExpr& computed = table.at(n, k);
        if (!(computed == expected))
            rep.mismatches.push_back(
                {n, k, computed.to_string(), expected.to_string()});
    }
    return rep;
}

} // namespace lahkit
