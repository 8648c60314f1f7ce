#pragma once

#include "singclass/combinatorics/characters.hpp"
#include "singclass/combinatorics/partition.hpp"
#include "singclass/combinatorics/profile.hpp"
#include "singclass/exact/rational.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace singclass {

namespace detail {

struct CycleSymbol {
    static std::string monomial(const Profile& p) {
        std::string s = "C[";
        for (std::size_t i = 0; i < p.length(); ++i) s += (i ? "," : "") + std::to_string(p.parts()[i]);
        return s + "]";
    }
};

struct XSymbol {
    static std::string monomial(const Profile& p) {
        if (p.empty()) return "";
        std::string s;
        for (auto [k, mult] : p.multiplicities()) {
            if (!s.empty()) s += "*";
            s += "x_" + std::to_string(k);
            if (mult > 1) s += "^" + std::to_string(mult);
        }
        return s;
    }
};

}  // namespace detail

/// Finite linear combination of profile-indexed monomials with rational
/// coefficients. Zero coefficients are never stored.
template <class Symbol>
class ProfileSum {
public:
    ProfileSum() = default;
    ProfileSum(std::initializer_list<std::pair<Profile, Rational>> terms) {
        for (const auto& [p, c] : terms) add(p, c);
    }

    static ProfileSum single(const Profile& p, const Rational& c = 1) {
        ProfileSum s;
        s.add(p, c);
        return s;
    }

    void add(const Profile& p, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(p, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    [[nodiscard]] const std::map<Profile, Rational>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] Rational coefficient(const Profile& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? Rational{} : it->second;
    }

    ProfileSum& operator+=(const ProfileSum& o) {
        for (const auto& [p, c] : o.terms_) add(p, c);
        return *this;
    }
    ProfileSum& operator-=(const ProfileSum& o) {
        for (const auto& [p, c] : o.terms_) add(p, -c);
        return *this;
    }
    friend ProfileSum operator+(ProfileSum a, const ProfileSum& b) { return a += b; }
    friend ProfileSum operator-(ProfileSum a, const ProfileSum& b) { return a -= b; }
    friend ProfileSum operator*(ProfileSum a, const Rational& c) {
        if (c.is_zero()) return {};
        for (auto& [p, x] : a.terms_) x *= c;
        return a;
    }
    friend bool operator==(const ProfileSum&, const ProfileSum&) = default;

    /// Terms by descending order (l + sum k), then ascending length, then
    /// lexicographically.
    [[nodiscard]] std::vector<std::pair<Profile, Rational>> ordered() const {
        std::vector<std::pair<Profile, Rational>> out(terms_.begin(), terms_.end());
        std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
            if (a.first.order() != b.first.order()) return a.first.order() > b.first.order();
            if (a.first.length() != b.first.length()) return a.first.length() < b.first.length();
            return a.first.parts() < b.first.parts();
        });
        return out;
    }

    [[nodiscard]] std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [p, c] : ordered()) {
            const bool negative = c.sign() < 0;
            s += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
            first = false;
            const Rational mag = c.abs();
            const std::string mono = Symbol::monomial(p);
            if (mono.empty()) s += mag.str();
            else if (mag == Rational(1)) s += mono;
            else s += mag.str() + "*" + mono;
        }
        return s;
    }

    /// {"terms": [{"profile": [k...], "coeff": "p/q"}]} in display order.
    [[nodiscard]] nlohmann::ordered_json json() const {
        nlohmann::ordered_json j;
        j["terms"] = nlohmann::ordered_json::array();
        for (const auto& [p, c] : ordered()) j["terms"].push_back({{"profile", p.parts()}, {"coeff", c.str()}});
        return j;
    }

private:
    std::map<Profile, Rational> terms_;
};

/// Combination of stable central elements C_{k_1..k_l}; the empty profile is
/// the identity.
using CycleExpr = ProfileSum<detail::CycleSymbol>;

/// Polynomial in x_1, x_2, ...; the profile {k_1..k_l} is the monomial
/// x_{k_1}...x_{k_l}.
using XPolynomial = ProfileSum<detail::XSymbol>;

/// Monomial product in the x variables.
inline XPolynomial operator*(const XPolynomial& a, const XPolynomial& b) {
    XPolynomial out;
    for (const auto& [p, c] : a.terms())
        for (const auto& [q, d] : b.terms()) out.add(p + q, c * d);
    return out;
}

/// Value of c on the partition lambda: sum of coeff * central_character.
inline Rational evaluate(const CycleExpr& c, const Partition& lambda) {
    Rational total;
    for (const auto& [p, coeff] : c.terms()) total += coeff * central_character(p, lambda);
    return total;
}

}  // namespace singclass
