#pragma once

#include "singclass/cycles/cycle_expr.hpp"
#include "singclass/parse_error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

namespace singclass {

namespace detail {

inline constexpr int kMaxGroupDegree = 8;

using Permutation = std::vector<int>;

// Lehmer-code rank of a permutation of 0..n-1.
inline std::size_t permutation_rank(const Permutation& perm) {
    std::size_t rank = 0;
    const std::size_t n = perm.size();
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t smaller = 0;
        for (std::size_t j = i + 1; j < n; ++j)
            if (perm[j] < perm[i]) ++smaller;
        rank = rank * (n - i) + smaller;
    }
    return rank;
}

inline std::vector<Permutation> all_permutations(int n) {
    Permutation p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<Permutation> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Cycle lengths of perm, unsorted.
inline std::vector<int> cycle_lengths(const Permutation& perm) {
    std::vector<bool> seen(perm.size(), false);
    std::vector<int> out;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
            seen[j] = true;
            ++len;
        }
        out.push_back(len);
    }
    return out;
}

// Coefficient of a permutation with the given cycle lengths in C_p inside
// Q[S_n]: the number of ways to number its cycles as the cycles of p, the
// numbered 1-cycles being chosen among the fixed points.
inline Rational numbering_count(const Profile& p, std::vector<int> lengths) {
    std::map<int, int> want = p.multiplicities();
    std::map<int, int> have;
    for (int len : lengths)
        if (len >= 2) ++have[len];
    const int fixed = static_cast<int>(std::count(lengths.begin(), lengths.end(), 1));
    const int numbered_fixed = want.count(1) ? want.at(1) : 0;
    want.erase(1);
    if (have != want || numbered_fixed > fixed) return Rational{};
    Rational count = Rational::factorial(static_cast<unsigned>(fixed)) /
                     Rational::factorial(static_cast<unsigned>(fixed - numbered_fixed));
    for (const auto& [len, w] : want) count *= Rational::factorial(static_cast<unsigned>(w));
    return count;
}

// Dense element of Q[S_n], indexed by permutation rank.
inline std::vector<Rational> group_element(const CycleExpr& c, const std::vector<Permutation>& perms) {
    std::vector<Rational> out(perms.size());
    for (std::size_t r = 0; r < perms.size(); ++r) {
        const auto lengths = cycle_lengths(perms[r]);
        for (const auto& [p, coeff] : c.terms()) out[r] += coeff * numbering_count(p, lengths);
    }
    return out;
}

}  // namespace detail

/// Brute-force check in Q[S_N] that C_{p1} * C_{p2} equals `claimed`.
inline bool verify_in_group_algebra(const Profile& p1, const Profile& p2, const CycleExpr& claimed, int n) {
    if (n < p1.sum() + p2.sum())
        throw ConstraintError("verify_in_group_algebra: N = " + std::to_string(n) + " is smaller than " +
                              std::to_string(p1.sum() + p2.sum()));
    if (n > detail::kMaxGroupDegree)
        throw ConstraintError("verify_in_group_algebra: N is capped at " + std::to_string(detail::kMaxGroupDegree));
    const auto perms = detail::all_permutations(n);
    const auto a = detail::group_element(CycleExpr::single(p1), perms);
    const auto b = detail::group_element(CycleExpr::single(p2), perms);
    const auto expected = detail::group_element(claimed, perms);

    std::vector<Rational> product(perms.size());
    detail::Permutation composed(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < perms.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < perms.size(); ++j) {
            if (b[j].is_zero()) continue;
            // (sigma tau)(x) = sigma(tau(x))
            for (std::size_t x = 0; x < composed.size(); ++x)
                composed[x] = perms[i][static_cast<std::size_t>(perms[j][x])];
            product[detail::permutation_rank(composed)] += a[i] * b[j];
        }
    }
    return product == expected;
}

}  // namespace singclass
