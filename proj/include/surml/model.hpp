// The seemingly-unrelated-regressions model: sparsity pattern with optional
// equality restrictions, exact data matrices, and the determinant objective
// G(beta) together with its gradient generators.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "surml/polymatrix.hpp"
#include "surml/rational.hpp"

namespace surml {

// A (response, covariate) pair, 0-based internally.
struct Entry {
    std::size_t r = 0;
    std::size_t c = 0;
    auto operator<=>(const Entry&) const = default;
};

class SparsityPattern {
public:
    // Entries are the free coefficient positions. Restrictions partition
    // them into classes sharing one free parameter; entries not mentioned
    // form singleton classes. Classes are canonically ordered row-major by
    // their smallest member, which fixes the variable order everywhere.
    SparsityPattern(std::size_t R, std::size_t C, std::vector<Entry> entries,
                    std::vector<std::vector<Entry>> restrictions = {});

    std::size_t R() const { return R_; }
    std::size_t C() const { return C_; }
    const std::vector<Entry>& entries() const { return entries_; }
    const std::vector<std::vector<Entry>>& classes() const { return classes_; }
    std::size_t free_params() const { return classes_.size(); }
    bool is_restricted() const { return classes_.size() != entries_.size(); }

    // Index of the restriction class owning (r, c); entries not in the
    // pattern have no class.
    std::size_t class_of(std::size_t r, std::size_t c) const;
    bool contains(std::size_t r, std::size_t c) const;

    // One name per free parameter, derived from the class representative,
    // e.g. "b11" for the class led by entry (1,1) in paper coordinates.
    std::vector<std::string> variable_names() const;

    std::string to_string() const;

private:
    std::size_t R_, C_;
    std::vector<Entry> entries_;
    std::vector<std::vector<Entry>> classes_;
    std::vector<std::vector<std::ptrdiff_t>> class_index_;  // R x C, -1 when absent
};

class Dataset {
public:
    // X is C x N, Y is R x N. Requires N >= R + C and the stacked
    // (R+C) x N matrix to have full rank (checked exactly).
    Dataset(std::vector<std::vector<Rational>> X, std::vector<std::vector<Rational>> Y);

    std::size_t C() const { return X_.size(); }
    std::size_t R() const { return Y_.size(); }
    std::size_t N() const { return N_; }
    const std::vector<std::vector<Rational>>& X() const { return X_; }
    const std::vector<std::vector<Rational>>& Y() const { return Y_; }

private:
    std::vector<std::vector<Rational>> X_, Y_;
    std::size_t N_;
};

struct ObjectiveSystem {
    MultiPoly G;
    std::vector<MultiPoly> gradient;  // gradient[k] = dG/d(class k)
    SparsityPattern pattern;
    // Residual matrix dimensions, used by the likelihood layer.
    std::size_t N = 0;
};

// Exact rank of a rational matrix via fraction-free elimination.
std::size_t exact_rank(const std::vector<std::vector<Rational>>& m);

// R x C polynomial matrix with the class variable at each pattern entry
// and zero elsewhere; restricted entries share one variable.
PolyMatrix build_B(const SparsityPattern& pattern);

// G = det((Y - BX)(Y - BX)') and all partial derivatives with respect to
// the free parameters.
ObjectiveSystem build_objective(const SparsityPattern& pattern, const Dataset& data);

// Entrywise scaling of both X and Y by lambda > 0.
Dataset apply_scaling(const Dataset& data, const Rational& lambda);

// Deterministic integer dataset with entries uniform in [-range, range],
// regenerated until the stacked-rank invariant holds.
Dataset random_dataset(const SparsityPattern& pattern, std::size_t N, std::uint64_t seed,
                       long range);

}  // namespace surml
