// Buchberger engine over the rationals with reduced bases, plus
// Hilbert-series dimension and degree of the leading-term ideal.
#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "surml/multipoly.hpp"

namespace surml {

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

struct Ideal {
    std::vector<MultiPoly> generators;
    std::size_t nvars = 0;

    static Ideal from_generators(std::vector<MultiPoly> gens);
};

struct GroebnerResult {
    // Reduced and monic, sorted ascending by leading monomial.
    std::vector<MultiPoly> basis;
    MonomialOrder order;
    int dimension = 0;   // Krull dimension of the quotient; -1 for the unit ideal
    long degree = 0;     // ideal degree from the Hilbert series

    bool is_unit_ideal() const;
    std::vector<Monomial> leading_monomials() const;
};

// Remainder of multivariate division of p by the list, in list order.
// No remainder term is divisible by any divisor leading term.
MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis,
                      const MonomialOrder& order);

// Reduced monic Groebner basis via Buchberger with the Gebauer-Moeller
// pair update (coprime and chain criteria) and normal pair selection.
// Throws ComputeTimeout when the optional deadline passes.
GroebnerResult buchberger(const Ideal& ideal, const MonomialOrder& order,
                          const Deadline& deadline = std::nullopt);

// Dimension and degree from the Hilbert series of the leading-term ideal.
// The unit ideal reports (-1, 0).
std::pair<int, long> hilbert_dim_degree(const GroebnerResult& gb);

// Dimension and degree of the monomial ideal generated by `lms` inside a
// polynomial ring with `nvars` variables.
std::pair<int, long> monomial_dim_degree(const std::vector<Monomial>& lms, std::size_t nvars);

// All monomials outside the leading-term ideal; requires dimension 0.
// Sorted ascending under the basis order; count equals the degree.
std::vector<Monomial> standard_monomials(const GroebnerResult& gb);

}  // namespace surml
