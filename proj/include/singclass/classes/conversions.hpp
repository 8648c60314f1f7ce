#pragma once

#include "singclass/classes/class_expr.hpp"
#include "singclass/classes/expansions.hpp"
#include "singclass/trees/substitute.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace singclass {

/// [T]_basic in the singularity basis: graft the expansion of psi^{m_i} into
/// every leaf marked m_i. The stick psi^m maps to psi_power_sing(m).
inline ClassExpr basic_tree_to_sing(const MarkedTree& tree) {
    static detail::MemoTable<std::string, ClassExpr> memo;
    return memo.get(tree.encoding(), [&tree] {
        std::vector<ClassExpr> grafts;
        for (int m : tree.leaves()) grafts.push_back(psi_power_sing(m));
        return substitute(tree, grafts);
    });
}

inline ClassExpr basic_to_sing(const ClassExpr& e) {
    if (e.basis() != Basis::basic) throw std::invalid_argument("basic_to_sing: expression is not in the basic basis");
    ClassExpr out(Basis::singularity, e.codim());
    for (const auto& [tree, coeff] : e.terms()) {
        ClassExpr image = basic_tree_to_sing(tree);
        for (const auto& [t, c] : image.terms()) out.add_term(t, c * coeff);
    }
    return out;
}

/// Inverts basic_to_sing. [T]_basic = [T]_sing / prod m_i! + (terms of lower
/// weight), so the heaviest remaining singularity tree is peeled off first.
inline ClassExpr sing_to_basic(const ClassExpr& e) {
    if (e.basis() != Basis::singularity)
        throw std::invalid_argument("sing_to_basic: expression is not in the singularity basis");
    ClassExpr residual = e;
    ClassExpr out(Basis::basic, e.codim());
    while (!residual.is_zero()) {
        auto lead = residual.terms().begin();
        for (auto it = residual.terms().begin(); it != residual.terms().end(); ++it) {
            const int w = it->first.weight(), lw = lead->first.weight();
            // ties: sticks (a_m) first, then map order
            if (w > lw || (w == lw && it->first.is_stick() && !lead->first.is_stick())) lead = it;
        }
        const MarkedTree tree = lead->first;
        Rational scale(1);
        for (int m : tree.leaves()) scale *= Rational::factorial(static_cast<unsigned>(m));
        const XiPolynomial coeff = lead->second * scale;

        out.add_term(tree, coeff);
        ClassExpr image = basic_tree_to_sing(tree);
        for (const auto& [t, c] : image.terms()) residual.add_term(t, -(c * coeff));
        if (!residual.coefficient(tree).is_zero())
            throw std::logic_error("sing_to_basic: leading term " + tree.encoding() + " did not cancel");
    }
    return out;
}

}  // namespace singclass
