#pragma once

#include "singclass/cycles/cycle_expr.hpp"
#include "singclass/exact/linear_solve.hpp"
#include "singclass/parse_error.hpp"

#include <stdexcept>
#include <vector>

namespace singclass {

namespace detail {

// Every profile (including the empty one) with l + sum k <= max_order.
inline std::vector<Profile> profiles_up_to_order(int max_order) {
    std::vector<Profile> out{Profile{}};
    for (int total = 1; total < max_order; ++total)
        for (const Profile& p : profiles_with_sum(total, 1))
            if (p.order() <= max_order) out.push_back(p);
    return out;
}

inline constexpr int kMaxSampleSize = 24;
inline constexpr int kResidualSizes = 2;

}  // namespace detail

/// C_{p1} * C_{p2} as a combination of stable central elements. The
/// coefficients solve the linear system "evaluations agree" on all partitions
/// of N = 1, 2, ..., stopping once the system has full column rank; two
/// further sizes serve as a residual check.
inline CycleExpr multiply_central(const Profile& p1, const Profile& p2) {
    if (p1.empty()) return CycleExpr::single(p2);
    if (p2.empty()) return CycleExpr::single(p1);
    const std::vector<Profile> unknowns = detail::profiles_up_to_order(p1.order() + p2.order());

    RationalMatrix rows;
    std::vector<Rational> rhs;
    auto add_size = [&](int n) {
        for (const Partition& lambda : partitions_of(n)) {
            std::vector<Rational> row;
            row.reserve(unknowns.size());
            for (const Profile& q : unknowns) row.push_back(central_character(q, lambda));
            rows.push_back(std::move(row));
            rhs.push_back(central_character(p1, lambda) * central_character(p2, lambda));
        }
    };

    int n = 0;
    std::size_t rank = 0;
    while (rank < unknowns.size()) {
        if (++n > detail::kMaxSampleSize)
            throw std::logic_error("multiply_central: sampled system still underdetermined at N = " +
                                   std::to_string(detail::kMaxSampleSize));
        add_size(n);
        if (rows.size() >= unknowns.size()) rank = solve_linear(rows, rhs).rank;
    }
    for (int extra = 1; extra <= detail::kResidualSizes; ++extra) add_size(n + extra);

    SolveResult solved = solve_linear(rows, rhs);
    if (solved.status != SolveStatus::unique)
        throw std::logic_error("multiply_central: residual check failed for " + p1.str() + " * " + p2.str());
    CycleExpr out;
    for (std::size_t i = 0; i < unknowns.size(); ++i) out.add(unknowns[i], solved.solution[i]);
    return out;
}

/// Bilinear extension of multiply_central.
inline CycleExpr operator*(const CycleExpr& a, const CycleExpr& b) {
    CycleExpr out;
    for (const auto& [p, c] : a.terms())
        for (const auto& [q, d] : b.terms()) out += multiply_central(p, q) * (c * d);
    return out;
}

}  // namespace singclass
