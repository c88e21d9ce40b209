#include "surml/multipoly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace surml {

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
    MultiPoly p(nvars);
    if (c != 0) p.terms_.emplace(Monomial(nvars), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t var) {
    MultiPoly p(nvars);
    p.terms_.emplace(Monomial::variable(nvars, var), Rational(1));
    return p;
}

std::uint32_t MultiPoly::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

std::uint32_t MultiPoly::degree_in(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exp(var));
    return d;
}

std::vector<std::size_t> MultiPoly::support_vars() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < nvars_; ++v)
        if (degree_in(v) > 0) out.push_back(v);
    return out;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void MultiPoly::check_compatible(const MultiPoly& other) const {
    if (nvars_ != other.nvars_)
        throw std::invalid_argument("multipoly: ambient variable count mismatch");
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const {
    MultiPoly out(*this);
    out += other;
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    check_compatible(other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

MultiPoly MultiPoly::operator-(const MultiPoly& other) const {
    MultiPoly out(*this);
    out -= other;
    return out;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
    check_compatible(other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
    check_compatible(other);
    MultiPoly out(nvars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_) out.add_term(ma.times(mb), ca * cb);
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(nvars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly out(nvars_);
    if (c == 0) return out;
    for (const auto& [m, coef] : terms_) out.terms_.emplace(m, coef * c);
    return out;
}

MultiPoly MultiPoly::differentiate(std::size_t var) const {
    if (var >= nvars_) throw std::out_of_range("multipoly: differentiation index out of range");
    MultiPoly out(nvars_);
    for (const auto& [m, c] : terms_) {
        std::uint32_t e = m.exp(var);
        if (e == 0) continue;
        std::vector<std::uint32_t> exps = m.exps();
        exps[var] = e - 1;
        out.add_term(Monomial(std::move(exps)), c * Rational(static_cast<long>(e)));
    }
    return out;
}

namespace {

// Per-variable power tables keep evaluation at one point linear in the
// term count.
template <typename Scalar>
std::vector<std::vector<Scalar>> power_table(const MultiPoly& p, const std::vector<Scalar>& point,
                                             const Scalar& one) {
    std::vector<std::vector<Scalar>> pows(p.nvars());
    for (std::size_t v = 0; v < p.nvars(); ++v) {
        std::uint32_t d = p.degree_in(v);
        pows[v].reserve(d + 1);
        pows[v].push_back(one);
        for (std::uint32_t e = 1; e <= d; ++e) pows[v].push_back(pows[v].back() * point[v]);
    }
    return pows;
}

}  // namespace

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != nvars_) throw std::invalid_argument("multipoly: evaluation point length mismatch");
    auto pows = power_table<Rational>(*this, point, Rational(1));
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t v = 0; v < nvars_; ++v)
            if (m.exp(v) > 0) t *= pows[v][m.exp(v)];
        acc += t;
    }
    return acc;
}

std::complex<double> MultiPoly::evaluate(const std::vector<std::complex<double>>& point) const {
    if (point.size() != nvars_) throw std::invalid_argument("multipoly: evaluation point length mismatch");
    auto pows = power_table<std::complex<double>>(*this, point, {1.0, 0.0});
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [m, c] : terms_) {
        std::complex<double> t(to_double(c), 0.0);
        for (std::size_t v = 0; v < nvars_; ++v)
            if (m.exp(v) > 0) t *= pows[v][m.exp(v)];
        acc += t;
    }
    return acc;
}

double MultiPoly::evaluate(const std::vector<double>& point) const {
    if (point.size() != nvars_) throw std::invalid_argument("multipoly: evaluation point length mismatch");
    auto pows = power_table<double>(*this, point, 1.0);
    double acc = 0.0;
    for (const auto& [m, c] : terms_) {
        double t = to_double(c);
        for (std::size_t v = 0; v < nvars_; ++v)
            if (m.exp(v) > 0) t *= pows[v][m.exp(v)];
        acc += t;
    }
    return acc;
}

const std::pair<const Monomial, Rational>& MultiPoly::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw std::domain_error("multipoly: leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (order.greater(it->first, best->first)) best = it;
    return *best;
}

double MultiPoly::coeff_scale() const {
    double scale = 0.0;
    for (const auto& [m, c] : terms_) scale = std::max(scale, std::abs(to_double(c)));
    return scale;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    // Display in descending container order so constant terms come last.
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string coef = surml::to_string(c);
        if (!out.empty()) {
            if (coef.front() == '-') {
                out += " - ";
                coef.erase(coef.begin());
            } else {
                out += " + ";
            }
        }
        if (m.is_one()) {
            out += coef;
        } else if (coef == "1") {
            out += m.to_string(names);
        } else if (coef == "-1") {
            out += "-" + m.to_string(names);
        } else {
            out += coef + "*" + m.to_string(names);
        }
    }
    return out;
}

MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op) {
    switch (op) {
        case PolyOp::Add: return a + b;
        case PolyOp::Sub: return a - b;
        case PolyOp::Mul: return a * b;
    }
    throw std::logic_error("poly_arith: bad op");
}

}  // namespace surml
