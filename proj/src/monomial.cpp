#include "surml/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace surml {

Monomial Monomial::variable(std::size_t nvars, std::size_t var, std::uint32_t exp) {
    if (var >= nvars) throw std::out_of_range("monomial: variable index out of range");
    Monomial m(nvars);
    m.exps_[var] = exp;
    return m;
}

std::uint32_t Monomial::total_degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

bool Monomial::coprime_with(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0 && other.exps_[i] > 0) return false;
    return true;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial out(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
    return out;
}

Monomial Monomial::quotient(const Monomial& other) const {
    Monomial out(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (other.exps_[i] > exps_[i]) throw std::domain_error("monomial: quotient not divisible");
        out.exps_[i] -= other.exps_[i];
    }
    return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial out(a);
    for (std::size_t i = 0; i < out.exps_.size(); ++i)
        out.exps_[i] = std::max(out.exps_[i], b.exps_[i]);
    return out;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[i];
        if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
    }
    return out.empty() ? "1" : out;
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
    MonomialOrder o;
    o.kind = OrderKind::Lex;
    o.perm.resize(nvars);
    std::iota(o.perm.begin(), o.perm.end(), 0);
    return o;
}

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) {
    MonomialOrder o;
    o.kind = OrderKind::GrevLex;
    o.perm.resize(nvars);
    std::iota(o.perm.begin(), o.perm.end(), 0);
    return o;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (kind == OrderKind::Lex) {
        for (std::uint32_t v : perm) {
            if (a.exp(v) != b.exp(v)) return a.exp(v) < b.exp(v) ? -1 : 1;
        }
        return 0;
    }
    std::uint32_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    // Equal degree: the monomial with the smaller exponent on the least
    // significant end is the larger one.
    for (std::size_t i = perm.size(); i-- > 0;) {
        std::uint32_t v = perm[i];
        if (a.exp(v) != b.exp(v)) return a.exp(v) > b.exp(v) ? -1 : 1;
    }
    return 0;
}

std::string MonomialOrder::to_string() const {
    return kind == OrderKind::Lex ? "lex" : "grevlex";
}

}  // namespace surml
