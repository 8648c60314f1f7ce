#pragma once

#include "singclass/trees/marked_tree.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <vector>

namespace singclass {

namespace detail {

// Subtree weight: a leaf marked m weighs m + 1, an internal vertex marked d
// weighs d + 1 plus its children. A tree with >= 2 leaves has codim = weight - 1.
inline const std::vector<TreeNode>& subtrees_of_weight(int w) {
    static std::recursive_mutex mutex;
    static std::map<int, std::vector<TreeNode>> memo;
    std::lock_guard lock(mutex);
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    std::vector<TreeNode> out;
    if (w >= 1) out.push_back(TreeNode{w - 1, {}});
    for (int d = 0; w - 1 - d >= 2; ++d) {
        const int budget = w - 1 - d;
        // children as a non-decreasing sequence of (weight, index) pairs
        std::vector<TreeNode> chosen;
        std::function<void(int, int, std::size_t)> rec = [&](int left, int min_w, std::size_t min_i) {
            if (left == 0) {
                if (chosen.size() >= 2) out.push_back(TreeNode{d, chosen});
                return;
            }
            for (int cw = min_w; cw <= left; ++cw) {
                const auto& pool = subtrees_of_weight(cw);
                for (std::size_t i = cw == min_w ? min_i : 0; i < pool.size(); ++i) {
                    chosen.push_back(pool[i]);
                    rec(left - cw, cw, i);
                    chosen.pop_back();
                }
            }
        };
        rec(budget, 1, 0);
    }
    return memo.emplace(w, std::move(out)).first->second;
}

}  // namespace detail

/// Every non-vanishing marked tree of codimension <= max_codim, sticks
/// included, point-normalized and without repetition, in canonical order.
inline std::vector<MarkedTree> trees_up_to_codim(int max_codim) {
    std::set<MarkedTree> found;
    for (int m = 0; m <= max_codim; ++m) found.insert(MarkedTree::stick(m));
    for (int w = 3; w <= max_codim + 1; ++w)
        for (const TreeNode& node : detail::subtrees_of_weight(w)) {
            if (node.is_leaf()) continue;
            MarkedTree t(node);
            if (!t.vanishes()) found.insert(t.point_normalized());
        }
    return {found.begin(), found.end()};
}

}  // namespace singclass
