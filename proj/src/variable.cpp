#include "lahkit/variable.hpp"

#include <cctype>

namespace lahkit {

std::string Var::name() const {
    switch (family) {
        case VarFamily::Phi: return "phi" + std::to_string(index);
        case VarFamily::PhiL:
            return "phi" + std::to_string(index) + "[" + std::to_string(level) + "]";
        case VarFamily::X: return "x" + std::to_string(index);
        case VarFamily::Y: return "y";
        case VarFamily::C: return "c" + std::to_string(index);
        case VarFamily::T: return "t";
        case VarFamily::Alpha: return "alpha" + std::to_string(index);
    }
    return "?";
}

std::string Var::pretty() const {
    switch (family) {
        case VarFamily::Phi: return "phi_" + std::to_string(index);
        case VarFamily::PhiL:
            return "phi_" + std::to_string(index) + "^[" + std::to_string(level) + "]";
        case VarFamily::X: return "x_" + std::to_string(index);
        case VarFamily::Y: return "y";
        case VarFamily::C: return "c_" + std::to_string(index);
        case VarFamily::T: return "t";
        case VarFamily::Alpha: return "alpha_" + std::to_string(index);
    }
    return "?";
}

namespace {

bool parse_int_at(const std::string& s, size_t& pos, int& out) {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) return false;
    out = std::stoi(s.substr(start, pos - start));
    return true;
}

} // namespace

Var parse_var(const std::string& s) {
    if (s == "y") return Var::y();
    if (s == "t") return Var::t();
    auto bad = [&]() -> Var { throw unknown_name("unknown indeterminate '" + s + "'"); };
    if (s.rfind("phi", 0) == 0) {
        size_t pos = 3;
        int i = 0;
        if (!parse_int_at(s, pos, i)) return bad();
        if (pos == s.size()) return Var::phi(i);
        if (s[pos] != '[') return bad();
        ++pos;
        int L = 0;
        if (!parse_int_at(s, pos, L)) return bad();
        if (pos + 1 != s.size() || s[pos] != ']') return bad();
        if (L < 1) return bad();
        return Var::phiL(i, L);
    }
    if (s.rfind("alpha", 0) == 0) {
        size_t pos = 5;
        int i = 0;
        if (!parse_int_at(s, pos, i) || pos != s.size()) return bad();
        return Var::alpha(i);
    }
    if (s.size() >= 2 && (s[0] == 'x' || s[0] == 'c')) {
        size_t pos = 1;
        int i = 0;
        if (!parse_int_at(s, pos, i) || pos != s.size() || i < 1) return bad();
        return s[0] == 'x' ? Var::x(i) : Var::c(i);
    }
    return bad();
}

} // namespace lahkit
