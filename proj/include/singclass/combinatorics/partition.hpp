#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace singclass {

/// Integer partition lambda_1 >= lambda_2 >= ... > 0.
class Partition {
public:
    Partition() = default;
    Partition(std::vector<int> rows) : rows_(std::move(rows)) {  // NOLINT
        for (int r : rows_)
            if (r < 1) throw std::invalid_argument("Partition: rows must be positive");
        if (!std::is_sorted(rows_.begin(), rows_.end(), std::greater<>()))
            throw std::invalid_argument("Partition: rows must be weakly decreasing");
    }
    Partition(std::initializer_list<int> rows) : Partition(std::vector<int>(rows)) {}

    /// Sorts the given parts into decreasing order.
    static Partition from_parts(std::vector<int> parts) {
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return Partition(std::move(parts));
    }

    [[nodiscard]] const std::vector<int>& rows() const { return rows_; }
    [[nodiscard]] std::size_t length() const { return rows_.size(); }
    [[nodiscard]] int size() const { return std::accumulate(rows_.begin(), rows_.end(), 0); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

    /// "[3,1,1]".
    [[nodiscard]] std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_.size(); ++i) s += (i ? "," : "") + std::to_string(rows_[i]);
        return s + "]";
    }

private:
    std::vector<int> rows_;
};

/// Partitions of n in reverse lexicographic order ((n) first).
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative size");
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int k = std::min(remaining, max_part); k >= 1; --k) {
            current.push_back(k);
            rec(remaining - k, k);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

}  // namespace singclass
