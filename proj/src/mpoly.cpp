#include "lahkit/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace lahkit {

Monomial Monomial::from_factors(std::vector<std::pair<Var, int>> factors) {
    std::sort(factors.begin(), factors.end());
    Monomial m;
    for (auto& [v, e] : factors) {
        if (e < 0) throw domain_error("Monomial: negative exponent");
        if (e == 0) continue;
        if (!m.factors_.empty() && m.factors_.back().first == v)
            m.factors_.back().second += e;
        else
            m.factors_.emplace_back(v, e);
    }
    return m;
}

int Monomial::total_degree() const {
    int d = 0;
    for (auto& [v, e] : factors_) d += e;
    return d;
}

int Monomial::exponent_of(Var v) const {
    for (auto& [w, e] : factors_)
        if (w == v) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    auto a = factors_.begin(), b = o.factors_.begin();
    while (a != factors_.end() || b != o.factors_.end()) {
        if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first))
            r.factors_.push_back(*a++);
        else if (a == factors_.end() || b->first < a->first)
            r.factors_.push_back(*b++);
        else {
            r.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const {
    Monomial r;
    auto a = factors_.begin();
    auto b = o.factors_.begin();
    while (b != o.factors_.end()) {
        if (a == factors_.end() || b->first < a->first) return std::nullopt;
        if (a->first < b->first) {
            r.factors_.push_back(*a++);
            continue;
        }
        if (a->second < b->second) return std::nullopt;
        if (a->second > b->second) r.factors_.emplace_back(a->first, a->second - b->second);
        ++a;
        ++b;
    }
    while (a != factors_.end()) r.factors_.push_back(*a++);
    return r;
}

std::string Monomial::to_string() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (auto& [v, e] : factors_) {
        if (!s.empty()) s += "*";
        s += v.name();
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::string Monomial::pretty() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (auto& [v, e] : factors_) {
        if (!s.empty()) s += " ";
        s += v.pretty();
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    // Lexicographic: scan variables in the registered order; the monomial
    // with the larger exponent at the first difference is grlex-greater.
    auto ia = a.factors().begin(), ib = b.factors().begin();
    while (ia != a.factors().end() && ib != b.factors().end()) {
        if (ia->first != ib->first) {
            // The side whose current variable comes first has positive
            // exponent where the other has zero.
            return !(ia->first < ib->first);
        }
        if (ia->second != ib->second) return ia->second < ib->second;
        ++ia;
        ++ib;
    }
    return ia == a.factors().end() && ib != b.factors().end();
}

void MPoly::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar MPoly::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Scalar(0) : it->second;
}

Scalar MPoly::as_scalar() const {
    if (!is_constant()) throw domain_error("MPoly: not a constant: " + to_string());
    return constant_term();
}

int MPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return terms_.begin()->first.total_degree();
}

Scalar MPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

MPoly MPoly::operator-() const {
    MPoly r;
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly r;
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

MPoly& MPoly::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

MPoly MPoly::substitute(const std::map<Var, MPoly>& bindings) const {
    MPoly result;
    for (auto& [m, c] : terms_) {
        MPoly term(c);
        std::vector<std::pair<Var, int>> kept;
        for (auto& [v, e] : m.factors()) {
            auto it = bindings.find(v);
            if (it == bindings.end())
                kept.emplace_back(v, e);
            else
                term *= it->second.pow(e);
        }
        term *= MPoly(Monomial::from_factors(std::move(kept)));
        result += term;
    }
    return result;
}

MPoly MPoly::derivative(Var v) const {
    MPoly r;
    for (auto& [m, c] : terms_) {
        int e = m.exponent_of(v);
        if (e == 0) continue;
        auto q = m.divide(Monomial(v));
        r.add_term(*q, c * Scalar(e));
    }
    return r;
}

MPoly MPoly::pow(int e) const {
    if (e < 0) throw domain_error("MPoly::pow: negative exponent");
    MPoly r(1);
    MPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = e > 1 ? base * base : base;
        e >>= 1;
    }
    return r;
}

MPoly MPoly::divide_exact(const MPoly& d) const {
    if (d.is_zero()) throw domain_error("divide_exact: zero divisor");
    MPoly rem = *this;
    MPoly quot;
    const auto& [lead_m, lead_c] = *d.terms_.begin();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.terms_.begin();
        auto q = rm.divide(lead_m);
        if (!q) throw domain_error("divide_exact: not divisible");
        MPoly qt(*q, rc / lead_c);
        quot += qt;
        rem -= qt * d;
    }
    return quot;
}

bool MPoly::is_coeffwise_nonneg(
    std::optional<std::pair<Monomial, Scalar>>* witness) const {
    for (auto& [m, c] : terms_) {
        if (c.sign() < 0) {
            if (witness) *witness = std::make_pair(m, c);
            return false;
        }
    }
    if (witness) witness->reset();
    return true;
}

bool MPoly::has_integer_coefficients() const {
    for (auto& [m, c] : terms_)
        if (!c.is_integer()) return false;
    return true;
}

namespace {

std::string render(const std::vector<std::pair<Monomial, Scalar>>& terms,
                   bool pretty) {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [m, c] : terms) {
        Scalar a = c;
        if (first) {
            if (a.sign() < 0) { out << "-"; a = -a; }
        } else {
            out << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        if (m.is_constant()) {
            out << a.to_string();
        } else {
            if (!a.is_one()) out << a.to_string() << (pretty ? " " : "*");
            out << (pretty ? m.pretty() : m.to_string());
        }
    }
    return out.str();
}

} // namespace

std::vector<std::pair<Monomial, Scalar>> MPoly::terms_in_table_order() const {
    std::vector<std::pair<Monomial, Scalar>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        // Ascending lexicographic on exponents read from the highest
        // variable downwards, the layout used by the reference tables.
        const auto& fa = a.first.factors();
        const auto& fb = b.first.factors();
        auto ia = fa.rbegin();
        auto ib = fb.rbegin();
        while (ia != fa.rend() || ib != fb.rend()) {
            if (ia == fa.rend()) return true;
            if (ib == fb.rend()) return false;
            if (ia->first != ib->first) return ia->first < ib->first;
            if (ia->second != ib->second) return ia->second < ib->second;
            ++ia;
            ++ib;
        }
        return false;
    });
    return v;
}

std::string MPoly::to_string() const {
    return render({terms_.begin(), terms_.end()}, false);
}

std::string MPoly::pretty() const {
    return render(terms_in_table_order(), true);
}

MPoly substitute_named(const MPoly& p, const std::map<std::string, MPoly>& bindings) {
    std::map<Var, MPoly> by_var;
    for (auto& [name, val] : bindings) by_var.emplace(parse_var(name), val);
    return p.substitute(by_var);
}

} // namespace lahkit
