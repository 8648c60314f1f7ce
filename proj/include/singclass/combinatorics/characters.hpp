#pragma once

#include "singclass/combinatorics/partition.hpp"
#include "singclass/combinatorics/profile.hpp"
#include "singclass/exact/rational.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace singclass {

namespace detail {

// Beta-numbers (first-column hook lengths) of a partition padded to `len` rows.
inline std::vector<int> beta_numbers(const std::vector<int>& rows, std::size_t len) {
    std::vector<int> beta(len);
    for (std::size_t i = 0; i < len; ++i) beta[i] = (i < rows.size() ? rows[i] : 0) + static_cast<int>(len - 1 - i);
    return beta;
}

inline std::vector<int> rows_from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    std::vector<int> rows;
    const std::size_t len = beta.size();
    for (std::size_t i = 0; i < len; ++i) {
        int r = beta[i] - static_cast<int>(len - 1 - i);
        if (r > 0) rows.push_back(r);
    }
    return rows;
}

class CharacterCache {
public:
    using Key = std::pair<std::vector<int>, std::vector<int>>;

    long long get(const std::vector<int>& shape, const std::vector<int>& cycles) {
        Key key{shape, cycles};
        {
            std::lock_guard lock(mutex_);
            if (auto it = table_.find(key); it != table_.end()) return it->second;
        }
        long long value = compute(shape, cycles);
        std::lock_guard lock(mutex_);
        table_.emplace(std::move(key), value);
        return value;
    }

private:
    // Murnaghan-Nakayama: strip a rim hook of length cycles.front() in every
    // possible way, with sign (-1)^{height}.
    long long compute(const std::vector<int>& shape, const std::vector<int>& cycles) {
        if (cycles.empty()) return shape.empty() ? 1 : 0;
        const int r = cycles.front();
        std::vector<int> rest(cycles.begin() + 1, cycles.end());
        std::vector<int> beta = beta_numbers(shape, shape.size());
        long long total = 0;
        for (std::size_t i = 0; i < beta.size(); ++i) {
            const int target = beta[i] - r;
            if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
            int between = 0;
            for (int b : beta)
                if (b > target && b < beta[i]) ++between;
            std::vector<int> moved = beta;
            moved[i] = target;
            long long sub = get(rows_from_beta(std::move(moved)), rest);
            total += (between % 2 ? -sub : sub);
        }
        return total;
    }

    std::mutex mutex_;
    std::map<Key, long long> table_;
};

inline CharacterCache& character_cache() {
    static CharacterCache cache;
    return cache;
}

}  // namespace detail

/// Irreducible character chi^lambda evaluated on the class of cycle type `cycle_type`.
inline long long mn_character(const Partition& lambda, const Partition& cycle_type) {
    if (lambda.size() != cycle_type.size())
        throw std::invalid_argument("mn_character: |lambda| = " + std::to_string(lambda.size()) +
                                    " but |cycle type| = " + std::to_string(cycle_type.size()));
    return detail::character_cache().get(lambda.rows(), cycle_type.rows());
}

/// Scalar by which the stable central element C_p acts in the irreducible
/// representation lambda. Zero when sum(p) > |lambda|.
inline Rational central_character(const Profile& p, const Partition& lambda) {
    const int n = lambda.size();
    const int k = p.sum();
    if (k > n) return Rational(0);
    // Ordered choices of disjoint cycles with lengths k_1..k_l.
    Rational count = Rational::factorial(static_cast<unsigned>(n)) /
                     (Rational::factorial(static_cast<unsigned>(n - k)) * Rational(p.product()));
    std::vector<int> parts = p.parts();
    parts.insert(parts.end(), static_cast<std::size_t>(n - k), 1);
    const long long chi = mn_character(lambda, Partition::from_parts(std::move(parts)));
    if (chi == 0) return Rational(0);
    const long long dim = mn_character(lambda, Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
    return count * Rational(chi) / Rational(dim);
}

/// (1/(m+1)!) sum_i [(lambda_i - i + 1/2)^{m+1} - (-i + 1/2)^{m+1}].
inline Rational shifted_power_sum(const Partition& lambda, int m) {
    if (m < 0) throw std::invalid_argument("shifted_power_sum: negative m");
    const auto e = static_cast<unsigned>(m + 1);
    const Rational half(1, 2);
    Rational total;
    for (std::size_t i = 1; i <= lambda.length(); ++i) {
        Rational shift = half - Rational(static_cast<long>(i));
        total += (Rational(lambda.rows()[i - 1]) + shift).pow(e) - shift.pow(e);
    }
    return total / Rational::factorial(e);
}

}  // namespace singclass
