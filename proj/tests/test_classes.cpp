#include "catch_amalgamated.hpp"

#include "singclass/classes/class_grammar.hpp"
#include "singclass/classes/conversions.hpp"
#include "singclass/classes/expansions.hpp"
#include "singclass/classes/point_coefficients.hpp"
#include "singclass/classes/render.hpp"
#include "singclass/trees/enumerate.hpp"

#include <map>
#include <random>

using namespace singclass;

namespace {

// Coefficients of prod_j Xtilde_{m_j}, with Xtilde_m = sum over k with
// l + sum k = m + 2 of prod k / (|Aut k| (sum k)!) x_k, expanded directly.
std::map<Profile, Rational> x_product(const std::vector<int>& ms) {
    std::map<Profile, Rational> acc{{Profile{}, Rational(1)}};
    for (int m : ms) {
        std::map<Profile, Rational> next;
        for (int total = 1; total <= m + 1; ++total)
            for (const Profile& k : profiles_with_sum(total, 1)) {
                if (k.order() != m + 2) continue;
                const Rational c = Rational(k.product()) / (Rational(aut_count(k)) * Rational::factorial(total));
                for (const auto& [p, v] : acc) next[p + k] += v * c;
            }
        acc = std::move(next);
    }
    return acc;
}

}  // namespace

TEST_CASE("psi decomposition evaluates correctly", "[classes]") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> value(-7, 7);
    for (int m = 0; m <= 8; ++m) {
        const auto c = psi_decomposition(m);
        REQUIRE(c.size() == static_cast<std::size_t>(m + 1));
        CHECK(c.back() == Rational(1) / Rational::factorial(static_cast<unsigned>(m)));
        for (int trial = 0; trial < 5; ++trial) {
            const Rational psi(value(rng), 3), xi(value(rng), 2);
            Rational rhs;
            for (int j = 0; j <= m; ++j) {
                Rational prod(1);
                for (int r = 1; r <= j; ++r) prod *= Rational(r) * psi - xi;
                rhs += c[static_cast<std::size_t>(j)] * xi.pow(static_cast<unsigned>(m - j)) * prod;
            }
            CHECK(rhs == psi.pow(static_cast<unsigned>(m)));
        }
    }
}

TEST_CASE("expansions are homogeneous with leading stick", "[classes]") {
    for (int m = 1; m <= 7; ++m) {
        const ClassExpr p = theorem1_expansion(m);
        CHECK(p.codim() == m);
        CHECK(p.basis() == Basis::singularity);
        CHECK(p.terms().at(MarkedTree::stick(m)) == XiPolynomial(Rational(1)));
        const ClassExpr s = psi_power_sing(m);
        CHECK(s.terms().at(MarkedTree::stick(m)) == XiPolynomial(Rational(1) / Rational::factorial(static_cast<unsigned>(m))));
        CHECK(s.terms().at(MarkedTree::stick(0)) == XiPolynomial::monomial(Rational(1), static_cast<std::size_t>(m)));
    }
    CHECK(psi_power_sing(0) == ClassExpr::unit(Basis::singularity));
}

TEST_CASE("product of the psi expansion with xi-linear factors", "[classes]") {
    // prod_{r=1}^m (r psi - xi) in the basic basis is a polynomial in psi and xi.
    for (int m = 1; m <= 6; ++m) {
        XiPolynomial acc(Rational(1));
        ClassExpr expected(Basis::basic, m);
        std::vector<Rational> poly{Rational(1)};  // coefficients in psi, each a polynomial in xi
        std::vector<XiPolynomial> coeffs{XiPolynomial(Rational(1))};
        for (int r = 1; r <= m; ++r) {
            std::vector<XiPolynomial> next(coeffs.size() + 1);
            for (std::size_t j = 0; j < coeffs.size(); ++j) {
                next[j + 1] += coeffs[j] * XiPolynomial(Rational(r));
                next[j] -= coeffs[j] * XiPolynomial::variable();
            }
            coeffs = std::move(next);
        }
        for (std::size_t j = 0; j < coeffs.size(); ++j) expected.add_term(MarkedTree::stick(static_cast<int>(j)), coeffs[j]);
        CHECK(sing_to_basic(theorem1_expansion(m)) == expected);
    }
}

TEST_CASE("conversions are linear inverses", "[classes]") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> value(-5, 5);
    const auto trees = trees_up_to_codim(6);
    for (int c = 0; c <= 6; ++c)
        for (int trial = 0; trial < 4; ++trial) {
            ClassExpr e(Basis::basic, c);
            for (const auto& t : trees)
                if (t.codim() <= c && value(rng) > 2)
                    e.add_term(t, XiPolynomial::monomial(Rational(value(rng), 2), static_cast<std::size_t>(c - t.codim())));
            const ClassExpr s = basic_to_sing(e);
            CHECK(s.codim() == c);
            CHECK(sing_to_basic(s) == e);
            CHECK(basic_to_sing(e * Rational(3) + e) == s * Rational(4));
        }
    CHECK_THROWS(basic_to_sing(ClassExpr::unit(Basis::singularity)));
    CHECK_THROWS(sing_to_basic(ClassExpr::unit(Basis::basic)));
}

TEST_CASE("basic generators are unitriangular up to factorials", "[classes]") {
    for (const auto& t : trees_up_to_codim(6)) {
        const ClassExpr s = basic_tree_to_sing(t);
        Rational lead(1);
        for (int m : t.leaves()) lead /= Rational::factorial(static_cast<unsigned>(m));
        CHECK(s.terms().at(t) == XiPolynomial(lead));
    }
}

TEST_CASE("psi point coefficients", "[classes]") {
    for (int m = 1; m <= 7; ++m) {
        const auto extracted = point_terms(psi_power_sing(m));
        for (int total = 1; total <= m + 1; ++total)
            for (const Profile& k : profiles_with_sum(total, 1)) {
                if (k.order() != m + 2) continue;
                const Rational expected = Rational(k.product()) / (Rational(aut_count(k)) * Rational::factorial(total));
                CHECK(point_coefficient_psi(m, k) == expected);
                const auto it = extracted.find(k);
                CHECK((it == extracted.end() ? Rational(0) : it->second) == expected);
                const Rational raw = Rational::factorial(static_cast<unsigned>(m)) /
                                     Rational::factorial(static_cast<unsigned>(m - static_cast<int>(k.length()) + 2)) *
                                     Rational(k.product()) / Rational(aut_count(k));
                CHECK(point_coefficient_psi(m, k, true) == raw);
            }
    }
    CHECK_THROWS_AS(point_coefficient_psi(2, {2, 2}), ConstraintError);
}

TEST_CASE("delta point coefficients match the X product", "[classes]") {
    const std::vector<std::vector<int>> rows{{0, 0}, {0, 1}, {1, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 0, 1}, {2, 2}, {1, 3}};
    for (const auto& ms : rows) {
        const auto expected = x_product(ms);
        for (const auto& [p, c] : expected) CHECK(point_coefficient_delta(ms, p) == c);
    }
    CHECK(point_coefficient_delta({0, 2}, {1, 3}) == Rational(1, 2));
    CHECK(point_coefficient_delta({0, 2}, {1, 1, 1}) == Rational(1, 4));
    CHECK_THROWS_AS(point_coefficient_delta({0, 2}, {1, 1}), ConstraintError);
}

TEST_CASE("point trees", "[classes]") {
    CHECK(point_tree({3}) == MarkedTree::stick(2));
    CHECK(point_tree({1, 1, 1}) == MarkedTree::star(1, {0, 0, 0}));
    CHECK_THROWS(point_tree({}));
}

TEST_CASE("text rendering", "[classes]") {
    CHECK(to_text(psi_power_sing(2)) == "1/2*a_2 + 1/4*i[1,1] + 3/2*xi*a_1 + xi^2");
    CHECK(to_text(sing_to_basic(parse_class("a_2"))) == "2*psi^2 - 1/2*d[0,0] - 3*xi*psi + xi^2");
    CHECK(to_text(ClassExpr(Basis::singularity, 3)) == "0");
    CHECK(to_text(ClassExpr::unit(Basis::basic)) == "1");
}

TEST_CASE("latex rendering", "[classes]") {
    CHECK(to_latex(psi_power_sing(2)) == "\\frac{1}{2} a_{2} + \\frac{1}{4} i_{1,1} + \\frac{3}{2} \\xi a_{1} + \\xi^{2}");
    CHECK(to_latex(sing_to_basic(parse_class("a_1"))) == "\\psi - \\xi");
}

TEST_CASE("json rendering", "[classes]") {
    const auto j = to_json(theorem1_expansion(2));
    CHECK(j["basis"] == "singularity");
    CHECK(j["codim"] == 2);
    REQUIRE(j["terms"].size() == 2);
    CHECK(j["terms"][0]["coeff"] == "1");
    CHECK(j["terms"][0]["tree"] == "2");
    CHECK(j["terms"][1]["coeff"] == "1/2");
    CHECK(j["terms"][1]["tree"] == "(0;0,0)");
}

TEST_CASE("rendered text parses back", "[classes]") {
    for (int m = 1; m <= 7; ++m) {
        for (const ClassExpr& e : {psi_power_sing(m), theorem1_expansion(m)}) {
            CHECK(parse_class(to_text(e)) == e);
            const ClassExpr b = sing_to_basic(e);
            CHECK(parse_class(to_text(b), Basis::basic) == b);
        }
    }
    for (const auto& t : trees_up_to_codim(6)) {
        const ClassExpr e = basic_tree_to_sing(t);
        CHECK(parse_class(to_text(e)) == e);
    }
}
