#pragma once

#include "singclass/classes/class_expr.hpp"
#include "singclass/cycles/completed_cycles.hpp"
#include "singclass/parse_error.hpp"

#include <map>
#include <numeric>
#include <vector>

namespace singclass {

/// Coefficient of alpha_l i_k in psi^m, where alpha_l is the point class of
/// M_{0,l+1}: prod k_i / (|Aut k| (sum k_i)!). With `raw` set, the value
/// m!/(m-l+2)! prod k_i / |Aut k| is returned instead.
inline Rational point_coefficient_psi(int m, const Profile& p, bool raw = false) {
    if (p.empty() || m + 2 != p.order())
        throw ConstraintError("point_coefficient_psi: need m + 2 = l + sum k, got m = " + std::to_string(m) +
                              " and k = " + p.str());
    const Rational value = Rational(p.product()) / Rational(aut_count(p)) /
                           Rational::factorial(static_cast<unsigned>(p.sum()));
    return raw ? value * Rational::factorial(static_cast<unsigned>(m)) : value;
}

/// Coefficient of alpha_l i_k in alpha_s delta_{m_1..m_s}: the coefficient of
/// x_{k_1}...x_{k_l} in the product of normalized X_{m_j}.
inline Rational point_coefficient_delta(const std::vector<int>& ms, const Profile& p) {
    const int lhs = 2 * static_cast<int>(ms.size()) + std::accumulate(ms.begin(), ms.end(), 0);
    if (ms.empty() || p.empty() || lhs != p.order())
        throw ConstraintError("point_coefficient_delta: need 2s + sum m = l + sum k, got " + std::to_string(lhs) +
                              " and " + std::to_string(p.order()));
    XPolynomial product = XPolynomial::single(Profile{});
    for (int m : ms) product = product * x_polynomial(m, true);
    return product.coefficient(p);
}

/// The tree carrying alpha_l i_k (l >= 2), or a_{k-1} for a single index.
inline MarkedTree point_tree(const Profile& p) {
    if (p.empty()) throw ConstraintError("point_tree: empty profile");
    if (p.length() == 1) return MarkedTree::stick(p.parts().front() - 1);
    std::vector<int> leaves;
    for (int k : p.parts()) leaves.push_back(k - 1);
    return MarkedTree::star(static_cast<int>(p.length()) - 2, leaves);
}

/// Xi-free coefficients of the point-class terms alpha_l i_k in a
/// singularity expression, keyed by k.
inline std::map<Profile, Rational> point_terms(const ClassExpr& e) {
    if (e.basis() != Basis::singularity)
        throw std::invalid_argument("point_terms: expression is not in the singularity basis");
    std::map<Profile, Rational> out;
    for (const auto& [tree, coeff] : e.terms()) {
        const bool point = tree.is_stick() ? tree.top().marking > 0
                                           : tree.is_star() && tree.top().marking == static_cast<int>(tree.leaf_count()) - 2;
        if (!point || coeff.coeff(0).is_zero()) continue;
        std::vector<int> parts;
        for (int m : tree.leaves()) parts.push_back(m + 1);
        out.emplace(Profile(parts), coeff.coeff(0));
    }
    return out;
}

}  // namespace singclass
