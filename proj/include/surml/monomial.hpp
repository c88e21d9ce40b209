// Monomials as dense exponent vectors plus the two monomial orders used
// throughout: lexicographic and graded reverse lexicographic.
#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace surml {

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    Monomial(std::initializer_list<std::uint32_t> exps) : exps_(exps) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

    static Monomial variable(std::size_t nvars, std::size_t var, std::uint32_t exp = 1);

    std::size_t nvars() const { return exps_.size(); }
    std::uint32_t exp(std::size_t v) const { return exps_[v]; }
    const std::vector<std::uint32_t>& exps() const { return exps_; }

    std::uint32_t total_degree() const;
    bool is_one() const;

    bool divides(const Monomial& other) const;
    bool coprime_with(const Monomial& other) const;

    Monomial times(const Monomial& other) const;
    // Exponentwise difference; requires other.divides(*this).
    Monomial quotient(const Monomial& other) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& other) const = default;
    // Container order (plain lexicographic on exponents), independent of
    // any monomial order; used for canonical term maps.
    bool operator<(const Monomial& other) const { return exps_ < other.exps_; }

    std::string to_string(const std::vector<std::string>& names) const;

private:
    std::vector<std::uint32_t> exps_;
};

enum class OrderKind { Lex, GrevLex };

// A total order on monomials compatible with multiplication, with 1 minimal.
// The permutation lists variables from most to least significant; entry i
// names the variable ranked i-th.
struct MonomialOrder {
    OrderKind kind = OrderKind::GrevLex;
    std::vector<std::uint32_t> perm;

    static MonomialOrder lex(std::size_t nvars);
    static MonomialOrder grevlex(std::size_t nvars);

    std::size_t nvars() const { return perm.size(); }

    // -1 if a < b, 0 if equal, +1 if a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    std::string to_string() const;
};

}  // namespace surml
