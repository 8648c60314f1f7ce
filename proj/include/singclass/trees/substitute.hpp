#pragma once

#include "singclass/classes/class_expr.hpp"
#include "singclass/trees/marked_tree.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace singclass {

struct GluedTerm {
    MarkedTree tree;
    XiPolynomial coeff;
};

namespace detail {

inline TreeNode graft_leaves(const TreeNode& node, const std::vector<const TreeNode*>& pieces, std::size_t& next) {
    if (node.is_leaf()) return *pieces[next++];
    TreeNode out{node.marking, {}};
    out.children.reserve(node.children.size());
    for (const auto& c : node.children) out.children.push_back(graft_leaves(c, pieces, next));
    return out;
}

}  // namespace detail

/// Every glued tree of the multilinear expansion, one per choice of a term in
/// each graft, before like terms are merged. grafts[i] goes into the i-th leaf
/// of `outer` in depth-first order.
inline std::vector<GluedTerm> substitution_terms(const MarkedTree& outer, const std::vector<ClassExpr>& grafts) {
    const std::size_t l = outer.leaf_count();
    if (grafts.size() != l)
        throw std::invalid_argument("substitute: " + std::to_string(grafts.size()) + " grafts for " +
                                    std::to_string(l) + " leaves");
    std::vector<std::vector<std::pair<const MarkedTree*, const XiPolynomial*>>> choices(l);
    for (std::size_t i = 0; i < l; ++i) {
        if (grafts[i].basis() != Basis::singularity)
            throw std::invalid_argument("substitute: grafts must be in the singularity basis");
        if (grafts[i].is_zero()) return {};
        for (const auto& [t, c] : grafts[i].terms()) choices[i].emplace_back(&t, &c);
    }
    std::vector<GluedTerm> out;
    std::vector<std::size_t> idx(l, 0);
    std::vector<const TreeNode*> pieces(l);
    while (true) {
        XiPolynomial coeff(Rational(1));
        for (std::size_t i = 0; i < l; ++i) {
            pieces[i] = &choices[i][idx[i]].first->top();
            coeff *= *choices[i][idx[i]].second;
        }
        std::size_t next = 0;
        out.push_back({MarkedTree(detail::graft_leaves(outer.top(), pieces, next)), std::move(coeff)});
        std::size_t pos = 0;
        while (pos < l && ++idx[pos] == choices[pos].size()) idx[pos++] = 0;
        if (pos == l) break;
    }
    return out;
}

/// Grafts one singularity-basis expression into each leaf of `outer` and
/// expands by multilinearity. Internal markings of `outer` are kept; a stick
/// grafts as a relabelled leaf.
inline ClassExpr substitute(const MarkedTree& outer, const std::vector<ClassExpr>& grafts) {
    auto glued = substitution_terms(outer, grafts);
    int codim = outer.codim();
    auto leaves = outer.leaves();
    for (std::size_t i = 0; i < leaves.size(); ++i) codim += grafts[i].codim() - leaves[i];
    ClassExpr out(Basis::singularity, codim);
    for (const auto& g : glued) out.add_term(g.tree, g.coeff);
    return out;
}

}  // namespace singclass
