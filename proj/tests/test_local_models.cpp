#include "catch_amalgamated.hpp"

#include "singclass/local_models/hurwitz.hpp"

#include <numeric>
#include <random>

using namespace singclass;

namespace {

ZPolynomial linear(const Rational& root) { return ZPolynomial{-root, Rational(1)}; }

// multiplicity of the root r in the polynomial p
int root_multiplicity(ZPolynomial p, const Rational& r) {
    int mult = 0;
    while (!p.is_zero() && p.evaluate(r).is_zero()) {
        p = p.divmod(linear(r)).first;
        ++mult;
    }
    return mult;
}

}  // namespace

TEST_CASE("profile constants", "[local_models]") {
    const ProfileConstants k = profile_constants({2, 4, 4});
    CHECK(k.lcm == 4);
    CHECK(k.ratios == std::vector<long>{2, 1, 1});
    CHECK(k.components == 8);
    CHECK(profile_constants({2, 3}).components == 1);
    CHECK_THROWS_AS(profile_constants({}), ConstraintError);
}

TEST_CASE("orbit counts", "[local_models]") {
    CHECK(orbit_count({2, 2}) == 2);
    CHECK(orbit_count({2, 3}) == 1);
    CHECK(orbit_count({2, 4, 4}) == 8);
    for (int total = 1; total <= 9; ++total)
        for (const Profile& p : profiles_with_sum(total, 1)) {
            const ProfileConstants k = profile_constants(p);
            CHECK(orbit_count(p) == k.components);
            CHECK(k.components * k.lcm == p.product());
        }
}

TEST_CASE("canonical functions have the prescribed critical point", "[local_models]") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> value(-6, 6);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<int> parts;
        for (int i = 0, n = 1 + trial % 3; i < n; ++i) parts.push_back(1 + (value(rng) + 6) % 4);
        const Profile p(parts);
        const Rational x(value(rng), 2);
        std::vector<Rational> poles;
        while (poles.size() < p.length()) {
            const Rational z(value(rng), 3);
            if (z != x && std::find(poles.begin(), poles.end(), z) == poles.end()) poles.push_back(z);
        }
        const RationalFunction f = canonical_function(p, x, poles);
        const int m = p.sum();
        CHECK(root_multiplicity(f.numerator(), x) == m);
        CHECK(root_multiplicity(f.derivative().numerator(), x) == m - 1);
        for (std::size_t i = 0; i < poles.size(); ++i)
            CHECK(root_multiplicity(f.denominator(), poles[i]) == p.parts()[i]);
    }
    CHECK_THROWS_AS(canonical_function({2}, Rational(0), {Rational(0)}), ConstraintError);
    CHECK_THROWS_AS(canonical_function({1, 1}, Rational(0), {Rational(1), Rational(1)}), ConstraintError);
    CHECK_THROWS_AS(canonical_function({1, 1}, Rational(0), {Rational(1)}), ConstraintError);
}

TEST_CASE("Hurwitz coordinates of small examples", "[local_models]") {
    // z^2 / (z^2 - 1) = 1 + (1/2)/(z - 1) - (1/2)/(z + 1)
    const RationalFunction f(ZPolynomial::monomial(Rational(1), 2), ZPolynomial{Rational(-1), Rational(0), Rational(1)});
    const HurwitzCoordinates h = hurwitz_coordinates(f, {1, 1}, {Rational(1), Rational(-1)});
    CHECK(h.constant == Rational(1));
    CHECK(h.branches[0].root == Rational(1, 2));
    CHECK(h.branches[1].root == Rational(-1, 2));
    CHECK(reassemble(h) == f);

    // z^2 / (z - 1)^2 = 1 + 2/(z - 1) + 1/(z - 1)^2
    const RationalFunction g(ZPolynomial::monomial(Rational(1), 2), linear(Rational(1)).pow(2));
    const HurwitzCoordinates hg = hurwitz_coordinates(g, {2}, {Rational(1)});
    REQUIRE(hg.branches.size() == 1);
    CHECK(hg.branches[0].root == Rational(1));
    CHECK(hg.branches[0].a(1) == Rational(2));
    CHECK(reassemble(hg) == g);

    // u^2 = 2 has no rational root; the scaled coordinates still reassemble
    const RationalFunction r(ZPolynomial(Rational(2)), linear(Rational(0)).pow(2));
    const HurwitzCoordinates hr = hurwitz_coordinates(r, {2}, {Rational(0)});
    CHECK_FALSE(hr.branches[0].root.has_value());
    CHECK_FALSE(hr.branches[0].a(1).has_value());
    CHECK(reassemble(hr) == r);
}

TEST_CASE("Hurwitz coordinates reject mismatched poles", "[local_models]") {
    const RationalFunction f(ZPolynomial(Rational(1)), linear(Rational(1)).pow(2));
    CHECK_THROWS_AS(hurwitz_coordinates(f, {1}, {Rational(1)}), ConstraintError);
    CHECK_THROWS_AS(hurwitz_coordinates(f, {2}, {Rational(2)}), ConstraintError);
    const RationalFunction improper(ZPolynomial::monomial(Rational(1), 3), linear(Rational(1)).pow(2));
    CHECK_THROWS_AS(hurwitz_coordinates(improper, {2}, {Rational(1)}), ConstraintError);
}

TEST_CASE("reassembly of canonical functions", "[local_models]") {
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> value(-9, 9);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<int> parts;
        for (int i = 0, n = 1 + trial % 4; i < n; ++i) parts.push_back(1 + (value(rng) + 9) % 3);
        const Profile p(parts);
        const Rational x(value(rng), 4);
        std::vector<Rational> poles;
        while (poles.size() < p.length()) {
            const Rational z(value(rng), 5);
            if (z != x && std::find(poles.begin(), poles.end(), z) == poles.end()) poles.push_back(z);
        }
        const RationalFunction f = canonical_function(p, x, poles);
        const HurwitzCoordinates h = hurwitz_coordinates(f, p, poles);
        CHECK(reassemble(h) == f);
        CHECK(h.constant == Rational(1));
        for (const auto& b : h.branches) {
            CHECK(b.scaled.front() == Rational(1));
            if (b.root) CHECK(b.root->pow(static_cast<unsigned>(b.order)) == b.lead);
        }
    }
}

TEST_CASE("rational function arithmetic", "[local_models]") {
    const RationalFunction a(ZPolynomial{Rational(1), Rational(1)}, ZPolynomial{Rational(-1), Rational(1)});
    const RationalFunction b(ZPolynomial(Rational(2)), ZPolynomial{Rational(-1), Rational(1)});
    CHECK((a - b) == RationalFunction(ZPolynomial(Rational(1))));
    CHECK((a * b).evaluate(Rational(3)) == Rational(2));
    CHECK(a.derivative().evaluate(Rational(0)) == Rational(-2));
    CHECK_THROWS_AS(a.evaluate(Rational(1)), std::domain_error);
    CHECK_THROWS_AS(RationalFunction(ZPolynomial(Rational(1)), ZPolynomial()), std::domain_error);
    CHECK(a.str() == "(1 + z) / (-1 + z)");
}
