#include "catch_amalgamated.hpp"

#include "singclass/exact/linear_solve.hpp"
#include "singclass/exact/polynomial.hpp"
#include "singclass/exact/power_series.hpp"
#include "singclass/exact/rational.hpp"

#include <random>

using namespace singclass;

TEST_CASE("rationals stay in lowest terms", "[exact]") {
    CHECK(Rational(6, 4).str() == "3/2");
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK((Rational(1, 2) + Rational(1, 3)).str() == "5/6");
    CHECK((Rational(1, 2) * Rational(2, 3)) == Rational(1, 3));
    CHECK(Rational(-3, 4).abs() == Rational(3, 4));
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational::factorial(6) == Rational(720));
    CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("rational parsing", "[exact]") {
    CHECK(Rational::parse("-12/18") == Rational(-2, 3));
    CHECK(Rational::parse("+5") == Rational(5));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational roots", "[exact]") {
    CHECK(rational_root(Rational(8, 27), 3) == Rational(2, 3));
    CHECK(rational_root(Rational(-8), 3) == Rational(-2));
    CHECK(rational_root(Rational(1, 4), 2) == Rational(1, 2));
    CHECK_FALSE(rational_root(Rational(-4), 2).has_value());
    CHECK_FALSE(rational_root(Rational(2), 2).has_value());
    CHECK(rational_root(Rational(0), 5) == Rational(0));
}

TEST_CASE("polynomial division recovers factors", "[exact]") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coeff(-5, 5);
    auto random_poly = [&](int deg) {
        std::vector<Rational> cs;
        for (int i = 0; i <= deg; ++i) cs.emplace_back(coeff(rng));
        if (cs.back().is_zero()) cs.back() = Rational(1);
        return ZPolynomial(cs);
    };
    for (int trial = 0; trial < 50; ++trial) {
        const ZPolynomial a = random_poly(trial % 5), b = random_poly(1 + trial % 3), r = random_poly(0);
        const auto [q, rem] = (a * b + r).divmod(b);
        CHECK(q == a);
        CHECK(rem == r);
        CHECK(gcd(a * b, b) == b.monic());
    }
}

TEST_CASE("polynomial calculus and rendering", "[exact]") {
    const ZPolynomial p{Rational(1), Rational(-2), Rational(0), Rational(3)};
    CHECK(p.derivative() == ZPolynomial{Rational(-2), Rational(0), Rational(9)});
    CHECK(p.evaluate(Rational(2)) == Rational(21));
    CHECK(p.taylor_shift(Rational(1)).evaluate(Rational(1)) == p.evaluate(Rational(2)));
    CHECK(p.str() == "1 - 2*z + 3*z^3");
    CHECK(ZPolynomial().str() == "0");
}

TEST_CASE("power series product matches naive convolution", "[exact]") {
    const std::size_t order = 12;
    std::vector<Rational> as, bs;
    for (std::size_t n = 0; n <= order; ++n) {
        as.emplace_back(static_cast<long>(n) + 1, 3);
        bs.emplace_back(1, static_cast<long>(n) + 2);
    }
    const PowerSeries a(as, order), b(bs, order);
    const PowerSeries c = a * b;
    for (std::size_t n = 0; n <= order; ++n) {
        Rational expected;
        for (std::size_t i = 0; i <= n; ++i) expected += a.coeff(i) * b.coeff(n - i);
        CHECK(c.coeff(n) == expected);
    }
    CHECK_THROWS(c.coeff(order + 1));
}

TEST_CASE("the sinh series", "[exact]") {
    const PowerSeries s = s_series(8);
    CHECK(s.coeff(0) == Rational(1));
    CHECK(s.coeff(1) == Rational(0));
    CHECK(s.coeff(2) == Rational(1, 24));
    CHECK(s.coeff(4) == Rational(1, 1920));
    CHECK(s.coeff(8) == Rational(1, 92897280));
    const PowerSeries s3 = series_scale_arg(s, 3);
    CHECK(s3.coeff(2) == Rational(9, 24));
    CHECK(s.pow(2).coeff(2) == Rational(1, 12));
}

TEST_CASE("exact linear solve", "[exact]") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
        RationalMatrix a(n, std::vector<Rational>(n));
        std::vector<Rational> x(n), b(n);
        for (auto& row : a)
            for (auto& v : row) v = Rational(entry(rng));
        for (std::size_t i = 0; i < n; ++i) a[i][i] += Rational(20);
        for (auto& v : x) v = Rational(entry(rng), 3);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) b[i] += a[i][j] * x[j];
        const SolveResult r = solve_linear(a, b);
        REQUIRE(r.status == SolveStatus::unique);
        CHECK(r.solution == x);
    }
    CHECK(solve_linear({{Rational(1), Rational(1)}}, {Rational(1)}).status == SolveStatus::underdetermined);
    CHECK(solve_linear({{Rational(1)}, {Rational(1)}}, {Rational(1), Rational(2)}).status == SolveStatus::inconsistent);
}
