#include "surml/polymatrix.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace surml {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), entries_(rows * cols, MultiPoly(nvars)) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("polymatrix: empty dimensions");
}

namespace {

// Determinant of the minor formed by the rows below the popcount of the
// mask and the columns still present in the mask.
MultiPoly minor_det(const PolyMatrix& m, std::uint32_t colmask,
                    std::unordered_map<std::uint32_t, MultiPoly>& memo) {
    auto it = memo.find(colmask);
    if (it != memo.end()) return it->second;

    std::size_t n = m.rows();
    std::size_t row = n - static_cast<std::size_t>(std::popcount(colmask));
    MultiPoly result(m.nvars());
    int sign = 1;
    for (std::size_t c = 0, seen = 0; c < n; ++c) {
        if (!(colmask & (1u << c))) continue;
        const MultiPoly& entry = m.at(row, c);
        if (!entry.is_zero()) {
            std::uint32_t sub = colmask & ~(1u << c);
            if (sub == 0) {
                if (sign > 0)
                    result += entry;
                else
                    result -= entry;
            } else {
                MultiPoly term = entry * minor_det(m, sub, memo);
                if (sign > 0)
                    result += term;
                else
                    result -= term;
            }
        }
        ++seen;
        sign = -sign;
    }
    memo.emplace(colmask, result);
    return result;
}

}  // namespace

MultiPoly poly_det(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("poly_det: non-square input");
    if (m.rows() > 31) throw std::invalid_argument("poly_det: size not supported");
    std::unordered_map<std::uint32_t, MultiPoly> memo;
    std::uint32_t full = (m.rows() == 31) ? 0x7fffffffu : ((1u << m.rows()) - 1);
    return minor_det(m, full, memo);
}

}  // namespace surml
