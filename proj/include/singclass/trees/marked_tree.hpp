#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace singclass {

/// A non-root vertex of a marked tree. Leaves have no children.
struct TreeNode {
    int marking = 0;
    std::vector<TreeNode> children;

    [[nodiscard]] bool is_leaf() const { return children.empty(); }
};

enum class Basis { singularity, basic };

inline const char* basis_name(Basis b) { return b == Basis::singularity ? "singularity" : "basic"; }

/// Marked l-tree in canonical form. The root is implicit and has valency 1;
/// `top()` is the vertex adjacent to it. A tree whose top vertex is a leaf is
/// the "stick" (a_m in the singularity basis, psi^m in the basic basis).
class MarkedTree {
public:
    /// Canonicalizes a raw tree. Throws on an internal vertex with fewer than
    /// two children or a negative marking.
    explicit MarkedTree(TreeNode raw) : top_(std::move(raw)) {
        encoding_ = canonicalize(top_);
    }

    static MarkedTree stick(int marking) { return MarkedTree(TreeNode{marking, {}}); }

    /// One internal vertex marked `internal` carrying the given leaves.
    static MarkedTree star(int internal, const std::vector<int>& leaves) {
        TreeNode top{internal, {}};
        for (int m : leaves) top.children.push_back(TreeNode{m, {}});
        return MarkedTree(std::move(top));
    }

    [[nodiscard]] const TreeNode& top() const { return top_; }
    [[nodiscard]] const std::string& encoding() const { return encoding_; }
    [[nodiscard]] bool is_stick() const { return top_.is_leaf(); }
    /// One internal vertex whose children are all leaves.
    [[nodiscard]] bool is_star() const {
        return !is_stick() && std::all_of(top_.children.begin(), top_.children.end(),
                                          [](const TreeNode& c) { return c.is_leaf(); });
    }

    /// Leaf markings in depth-first order of the canonical tree.
    [[nodiscard]] std::vector<int> leaves() const {
        std::vector<int> out;
        collect_leaves(top_, out);
        return out;
    }
    [[nodiscard]] std::size_t leaf_count() const { return leaves().size(); }
    [[nodiscard]] int weight() const {
        auto ls = leaves();
        return std::accumulate(ls.begin(), ls.end(), 0);
    }
    [[nodiscard]] std::size_t internal_count() const { return count_internal(top_); }
    [[nodiscard]] int internal_marking_sum() const { return internal_marking_sum(top_); }

    /// Codimension of the class: the stick m has codimension m; otherwise
    /// sum over leaves of (marking + 1), plus internal markings, plus one per
    /// internal edge.
    [[nodiscard]] int codim() const {
        if (is_stick()) return top_.marking;
        int leaves_part = 0;
        for (int m : leaves()) leaves_part += m + 1;
        return leaves_part + internal_marking_sum() + static_cast<int>(internal_count()) - 1;
    }

    /// Degree of the underlying class in H*(M_{0,l+1}).
    [[nodiscard]] int moduli_degree() const {
        if (is_stick()) return 0;
        return static_cast<int>(internal_count()) - 1 + internal_marking_sum();
    }

    /// True iff some internal vertex carries a marking above its valency minus 3.
    [[nodiscard]] bool vanishes() const { return vanishes(top_); }

    /// Non-vanishing trees of top degree all represent the point class of
    /// M_{0,l+1}; they are rewritten as the star with internal marking l-2.
    [[nodiscard]] MarkedTree point_normalized() const {
        if (is_stick() || is_star() || vanishes()) return *this;
        const auto l = static_cast<int>(leaf_count());
        if (moduli_degree() != l - 2) return *this;
        return star(l - 2, leaves());
    }

    /// Same tree with the marking of the root-adjacent vertex raised by `by`.
    [[nodiscard]] MarkedTree with_top_marking_added(int by) const {
        if (is_stick()) throw std::logic_error("MarkedTree: psi multiplication is not defined on a stick");
        TreeNode t = top_;
        t.marking += by;
        return MarkedTree(std::move(t));
    }

    friend bool operator==(const MarkedTree& a, const MarkedTree& b) { return a.encoding_ == b.encoding_; }
    friend std::strong_ordering operator<=>(const MarkedTree& a, const MarkedTree& b) {
        return a.encoding_ <=> b.encoding_;
    }

private:
    static std::string canonicalize(TreeNode& node) {
        if (node.marking < 0) throw std::invalid_argument("MarkedTree: negative marking");
        if (node.is_leaf()) return std::to_string(node.marking);
        if (node.children.size() < 2)
            throw std::invalid_argument("MarkedTree: internal vertex with fewer than two children");
        std::vector<std::pair<std::string, TreeNode>> keyed;
        keyed.reserve(node.children.size());
        for (auto& c : node.children) {
            std::string enc = canonicalize(c);
            keyed.emplace_back(std::move(enc), std::move(c));
        }
        std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        std::string enc = "(" + std::to_string(node.marking) + ";";
        node.children.clear();
        for (std::size_t i = 0; i < keyed.size(); ++i) {
            enc += (i ? "," : "") + keyed[i].first;
            node.children.push_back(std::move(keyed[i].second));
        }
        return enc + ")";
    }

    static void collect_leaves(const TreeNode& n, std::vector<int>& out) {
        if (n.is_leaf()) {
            out.push_back(n.marking);
            return;
        }
        for (const auto& c : n.children) collect_leaves(c, out);
    }
    static std::size_t count_internal(const TreeNode& n) {
        if (n.is_leaf()) return 0;
        std::size_t k = 1;
        for (const auto& c : n.children) k += count_internal(c);
        return k;
    }
    static int internal_marking_sum(const TreeNode& n) {
        if (n.is_leaf()) return 0;
        int s = n.marking;
        for (const auto& c : n.children) s += internal_marking_sum(c);
        return s;
    }
    static bool vanishes(const TreeNode& n) {
        if (n.is_leaf()) return false;
        // valency = children + parent edge
        if (n.marking > static_cast<int>(n.children.size()) + 1 - 3) return true;
        return std::any_of(n.children.begin(), n.children.end(), [](const TreeNode& c) { return vanishes(c); });
    }

    TreeNode top_;
    std::string encoding_;
};

struct TreeTerm {
    MarkedTree tree;
    Basis basis;
};

/// Codimension of a tree class; the two bases share the grading.
inline int codim(const TreeTerm& term) { return term.tree.codim(); }

}  // namespace singclass
