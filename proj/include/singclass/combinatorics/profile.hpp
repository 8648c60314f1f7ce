#pragma once

#include "singclass/exact/rational.hpp"

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace singclass {

/// Multiset of positive integers k_1 <= ... <= k_l. The empty profile is the
/// identity element of the class algebra.
class Profile {
public:
    Profile() = default;
    Profile(std::vector<int> parts) : parts_(std::move(parts)) {  // NOLINT
        for (int k : parts_)
            if (k < 1) throw std::invalid_argument("Profile: parts must be positive");
        std::sort(parts_.begin(), parts_.end());
    }
    Profile(std::initializer_list<int> parts) : Profile(std::vector<int>(parts)) {}

    [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
    [[nodiscard]] std::size_t length() const { return parts_.size(); }
    [[nodiscard]] bool empty() const { return parts_.empty(); }
    [[nodiscard]] int sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    /// l + sum k_i.
    [[nodiscard]] int order() const { return static_cast<int>(length()) + sum(); }
    [[nodiscard]] long product() const {
        return std::accumulate(parts_.begin(), parts_.end(), 1L, std::multiplies<>());
    }

    [[nodiscard]] std::map<int, int> multiplicities() const {
        std::map<int, int> m;
        for (int k : parts_) ++m[k];
        return m;
    }

    /// Multiset union.
    friend Profile operator+(const Profile& a, const Profile& b) {
        std::vector<int> parts = a.parts_;
        parts.insert(parts.end(), b.parts_.begin(), b.parts_.end());
        return Profile(std::move(parts));
    }

    friend bool operator==(const Profile&, const Profile&) = default;
    friend auto operator<=>(const Profile&, const Profile&) = default;

    /// "{1,2,2}".
    [[nodiscard]] std::string str() const {
        std::string s = "{";
        for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
        return s + "}";
    }

private:
    std::vector<int> parts_;
};

/// Number of permutations of the parts fixing the sequence: prod over values of multiplicity!.
inline long aut_count(const Profile& p) {
    long out = 1;
    for (auto [value, mult] : p.multiplicities())
        for (int i = 2; i <= mult; ++i) out *= i;
    return out;
}

/// All multisets with the given sum and at least min_len parts, ordered by
/// length and then lexicographically.
inline std::vector<Profile> profiles_with_sum(int total, int min_len) {
    if (total < 0) throw std::invalid_argument("profiles_with_sum: negative total");
    std::vector<std::vector<int>> found;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int min_part) {
        if (remaining == 0) {
            found.push_back(current);
            return;
        }
        for (int k = min_part; k <= remaining; ++k) {
            current.push_back(k);
            rec(remaining - k, k);
            current.pop_back();
        }
    };
    rec(total, 1);
    std::vector<Profile> out;
    for (auto& parts : found)
        if (static_cast<int>(parts.size()) >= min_len) out.emplace_back(std::move(parts));
    std::sort(out.begin(), out.end(), [](const Profile& a, const Profile& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.parts() < b.parts();
    });
    return out;
}

}  // namespace singclass

template <>
struct std::hash<singclass::Profile> {
    std::size_t operator()(const singclass::Profile& p) const {
        std::size_t h = 0;
        for (int k : p.parts()) h = h * 1000003U + static_cast<std::size_t>(k);
        return h;
    }
};
