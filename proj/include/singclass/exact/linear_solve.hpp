#pragma once

#include "singclass/exact/rational.hpp"

#include <stdexcept>
#include <vector>

namespace singclass {

using RationalMatrix = std::vector<std::vector<Rational>>;

enum class SolveStatus { unique, underdetermined, inconsistent };

struct SolveResult {
    SolveStatus status;
    std::vector<Rational> solution;  // filled only for SolveStatus::unique
    std::size_t rank = 0;
};

/// Exact Gauss-Jordan elimination. Underdetermined and inconsistent systems
/// are reported, not thrown.
inline SolveResult solve_linear(RationalMatrix system, std::vector<Rational> rhs) {
    const std::size_t rows = system.size();
    if (rhs.size() != rows) throw std::invalid_argument("solve_linear: rhs length differs from row count");
    const std::size_t cols = rows ? system.front().size() : 0;
    for (const auto& r : system)
        if (r.size() != cols) throw std::invalid_argument("solve_linear: ragged matrix");

    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < rows; ++c) {
        std::size_t p = row;
        while (p < rows && system[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(system[p], system[row]);
        std::swap(rhs[p], rhs[row]);
        Rational inv = Rational(1) / system[row][c];
        for (std::size_t j = c; j < cols; ++j) system[row][j] *= inv;
        rhs[row] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || system[r][c].is_zero()) continue;
            Rational f = system[r][c];
            for (std::size_t j = c; j < cols; ++j) system[r][j] -= f * system[row][j];
            rhs[r] -= f * rhs[row];
        }
        pivot_col.push_back(c);
        ++row;
    }
    SolveResult result{SolveStatus::unique, {}, row};
    for (std::size_t r = row; r < rows; ++r)
        if (!rhs[r].is_zero()) {
            result.status = SolveStatus::inconsistent;
            return result;
        }
    if (row < cols) {
        result.status = SolveStatus::underdetermined;
        return result;
    }
    result.solution.resize(cols);
    for (std::size_t r = 0; r < row; ++r) result.solution[pivot_col[r]] = rhs[r];
    return result;
}

}  // namespace singclass
