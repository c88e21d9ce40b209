// Sparse multivariate polynomials over exact rationals: the carrier for
// the determinant objective and its gradient generators.
#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "surml/monomial.hpp"
#include "surml/rational.hpp"

namespace surml {

class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational>;

    MultiPoly() = default;
    explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

    static MultiPoly zero(std::size_t nvars) { return MultiPoly(nvars); }
    static MultiPoly constant(std::size_t nvars, const Rational& c);
    static MultiPoly variable(std::size_t nvars, std::size_t var);

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t nterms() const { return terms_.size(); }
    std::uint32_t total_degree() const;
    std::uint32_t degree_in(std::size_t var) const;
    // Variables with a positive exponent somewhere in the support.
    std::vector<std::size_t> support_vars() const;

    // Adds c*m into the term map, dropping the term if it cancels to zero.
    void add_term(const Monomial& m, const Rational& c);

    MultiPoly operator+(const MultiPoly& other) const;
    MultiPoly operator-(const MultiPoly& other) const;
    MultiPoly operator*(const MultiPoly& other) const;
    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    MultiPoly scaled(const Rational& c) const;

    bool operator==(const MultiPoly& other) const = default;

    MultiPoly differentiate(std::size_t var) const;

    Rational evaluate(const std::vector<Rational>& point) const;
    std::complex<double> evaluate(const std::vector<std::complex<double>>& point) const;
    double evaluate(const std::vector<double>& point) const;

    // Leading term with respect to a monomial order; poly must be nonzero.
    const std::pair<const Monomial, Rational>& leading_term(const MonomialOrder& order) const;

    // Largest |coefficient| as a double; 0 for the zero polynomial.
    double coeff_scale() const;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    void check_compatible(const MultiPoly& other) const;

    std::size_t nvars_ = 0;
    TermMap terms_;
};

enum class PolyOp { Add, Sub, Mul };

// Dispatch helper mirroring the three exact ring operations.
MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op);

}  // namespace surml
