// Rectangular grids of polynomials and exact determinants of square ones.
#pragma once

#include <cstddef>
#include <vector>

#include "surml/multipoly.hpp"

namespace surml {

class PolyMatrix {
public:
    PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nvars() const { return nvars_; }

    MultiPoly& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const MultiPoly& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

private:
    std::size_t rows_, cols_, nvars_;
    std::vector<MultiPoly> entries_;
};

// Exact determinant by Laplace expansion memoized over column subsets.
MultiPoly poly_det(const PolyMatrix& m);

}  // namespace surml
