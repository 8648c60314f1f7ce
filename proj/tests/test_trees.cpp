#include "catch_amalgamated.hpp"

#include "singclass/classes/conversions.hpp"
#include "singclass/classes/expansions.hpp"
#include "singclass/parse_error.hpp"
#include "singclass/trees/enumerate.hpp"
#include "singclass/trees/marked_tree.hpp"
#include "singclass/trees/substitute.hpp"
#include "singclass/trees/tree_grammar.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace singclass;

namespace {

void shuffle_children(TreeNode& node, std::mt19937& rng) {
    std::shuffle(node.children.begin(), node.children.end(), rng);
    for (auto& c : node.children) shuffle_children(c, rng);
}

}  // namespace

TEST_CASE("canonical encoding", "[trees]") {
    CHECK(parse_tree("3").encoding() == "3");
    CHECK(parse_tree("(0;2,1)") == MarkedTree::star(0, {1, 2}));
    CHECK(parse_tree("(1;0,(0;1,0),0)") == parse_tree("( 1 ; (0;0,1), 0, 0 )"));
    CHECK(parse_tree("(0;(0;0,0),0)") != parse_tree("(0;0,0,0)"));
}

TEST_CASE("encoding is invariant under child shuffles", "[trees]") {
    std::mt19937 rng(3);
    for (const MarkedTree& t : trees_up_to_codim(6))
        for (int i = 0; i < 5; ++i) {
            TreeNode raw = t.top();
            shuffle_children(raw, rng);
            CHECK(MarkedTree(raw) == t);
        }
}

TEST_CASE("tree grammar errors carry positions", "[trees]") {
    CHECK_THROWS_AS(parse_tree("(0;1)"), ParseError);
    CHECK_THROWS_AS(parse_tree("(0;1,"), ParseError);
    CHECK_THROWS_AS(parse_tree("(a;1,2)"), ParseError);
    CHECK_THROWS_AS(parse_tree(""), ParseError);
    try {
        parse_tree("(0;1,2)x");
        FAIL("no exception");
    } catch (const ParseError& e) {
        CHECK(e.position() == 7);
    }
}

TEST_CASE("codimension and vanishing", "[trees]") {
    CHECK(MarkedTree::stick(4).codim() == 4);
    CHECK(MarkedTree::star(0, {0, 0}).codim() == 2);
    CHECK(MarkedTree::star(1, {0, 0, 0}).codim() == 4);
    CHECK(parse_tree("(0;(0;0,0),0,0)").codim() == 5);
    CHECK(MarkedTree::star(1, {0, 0}).vanishes());
    CHECK_FALSE(MarkedTree::star(1, {0, 0, 0}).vanishes());
    CHECK(parse_tree("(0;(1;0,0),0)").vanishes());
    CHECK_THROWS(MarkedTree::star(0, {1}));
    CHECK_THROWS(MarkedTree::stick(-1));
}

TEST_CASE("point normalization", "[trees]") {
    // one internal edge on three leaves: top degree of M_{0,4}
    const MarkedTree t = parse_tree("(0;(0;0,1),2)");
    CHECK(t.moduli_degree() == 1);
    CHECK(t.point_normalized() == MarkedTree::star(1, {0, 1, 2}));
    CHECK(t.point_normalized().codim() == t.codim());
    const MarkedTree low = parse_tree("(0;(0;0,0),0,0)");
    CHECK(low.point_normalized() == low);
}

TEST_CASE("enumeration", "[trees]") {
    const std::vector<std::size_t> counts{1, 2, 4, 7, 13, 24, 47};
    for (int c = 0; c <= 6; ++c) {
        const auto trees = trees_up_to_codim(c);
        CHECK(trees.size() == counts[static_cast<std::size_t>(c)]);
        std::set<MarkedTree> distinct(trees.begin(), trees.end());
        CHECK(distinct.size() == trees.size());
        for (const auto& t : trees) {
            CHECK(t.codim() <= c);
            CHECK_FALSE(t.vanishes());
            CHECK(t.point_normalized() == t);
        }
    }
}

TEST_CASE("substitution is multilinear", "[trees]") {
    const MarkedTree outer = MarkedTree::star(0, {1, 2});
    const ClassExpr g1 = psi_power_sing(1), g2 = theorem1_expansion(1) * Rational(3);
    const ClassExpr h = psi_power_sing(2);
    CHECK(substitute(outer, {g1 + g2, h}) == substitute(outer, {g1, h}) + substitute(outer, {g2, h}));
    CHECK(substitute(outer, {g1 * Rational(5), h}) == substitute(outer, {g1, h}) * Rational(5));
    CHECK_THROWS(substitute(outer, {g1}));
}

TEST_CASE("substitution into delta_{0,1,2}", "[trees]") {
    const MarkedTree outer = MarkedTree::star(0, {0, 1, 2});
    const auto raw = substitution_terms(outer, {psi_power_sing(0), psi_power_sing(1), psi_power_sing(2)});
    CHECK(raw.size() == 8);
    const ClassExpr merged = basic_tree_to_sing(outer);
    CHECK(merged.codim() == outer.codim());
    CHECK(merged.codim() == 6);
}

TEST_CASE("sticks graft as relabelled leaves", "[trees]") {
    const MarkedTree outer = MarkedTree::star(0, {0, 0});
    const ClassExpr a2 = ClassExpr::single(Basis::singularity, MarkedTree::stick(2));
    const ClassExpr out = substitute(outer, {a2, ClassExpr::unit(Basis::singularity)});
    CHECK(out == ClassExpr::single(Basis::singularity, MarkedTree::star(0, {0, 2})));
}
