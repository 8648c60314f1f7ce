#pragma once

#include "singclass/exact/rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace singclass {

/// Dense univariate polynomial over the rationals. The tag fixes the name of
/// the variable so that polynomials in different formal symbols never mix.
template <class Tag>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(Rational c) { if (!c.is_zero()) coeffs_.push_back(std::move(c)); }  // NOLINT
    Polynomial(std::initializer_list<Rational> cs) : coeffs_(cs) { trim(); }
    explicit Polynomial(std::vector<Rational> cs) : coeffs_(std::move(cs)) { trim(); }

    static Polynomial monomial(Rational c, std::size_t exponent) {
        if (c.is_zero()) return {};
        std::vector<Rational> cs(exponent + 1);
        cs[exponent] = std::move(c);
        return Polynomial(std::move(cs));
    }
    /// The variable itself.
    static Polynomial variable() { return monomial(1, 1); }

    /// std::nullopt for the zero polynomial.
    [[nodiscard]] std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }
    [[nodiscard]] Rational coeff(std::size_t e) const { return e < coeffs_.size() ? coeffs_[e] : Rational(0); }
    [[nodiscard]] const Rational& leading() const {
        if (coeffs_.empty()) throw std::domain_error("Polynomial: leading coefficient of zero");
        return coeffs_.back();
    }
    /// Lowest exponent with a nonzero coefficient.
    [[nodiscard]] std::optional<std::size_t> valuation() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero()) return i;
        return std::nullopt;
    }
    [[nodiscard]] bool is_monomial() const { return !is_zero() && valuation() == degree(); }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Rational& c) {
        if (c.is_zero()) { coeffs_.clear(); return *this; }
        for (auto& x : coeffs_) x *= c;
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(out));
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Multiplication by variable^k.
    [[nodiscard]] Polynomial shifted(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<Rational> cs(k);
        cs.insert(cs.end(), coeffs_.begin(), coeffs_.end());
        return Polynomial(std::move(cs));
    }

    [[nodiscard]] Polynomial pow(unsigned e) const {
        Polynomial result(Rational(1)), base = *this;
        while (e) {
            if (e & 1U) result *= base;
            e >>= 1U;
            if (e) base *= base;
        }
        return result;
    }

    [[nodiscard]] Polynomial derivative() const {
        std::vector<Rational> cs;
        for (std::size_t i = 1; i < coeffs_.size(); ++i) cs.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
        return Polynomial(std::move(cs));
    }

    [[nodiscard]] Rational evaluate(const Rational& x) const {
        Rational acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// p(var + a), i.e. the Taylor expansion around a.
    [[nodiscard]] Polynomial taylor_shift(const Rational& a) const {
        Polynomial out, lin{a, Rational(1)};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) out = out * lin + Polynomial(*it);
        return out;
    }

    [[nodiscard]] Polynomial monic() const {
        if (is_zero()) return {};
        return *this * (Rational(1) / leading());
    }

    /// Euclidean division: returns (quotient, remainder).
    [[nodiscard]] std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        if (d.is_zero()) throw std::domain_error("Polynomial: division by zero polynomial");
        Polynomial r = *this;
        std::vector<Rational> q;
        const std::size_t dd = *d.degree();
        if (!r.is_zero() && *r.degree() >= dd) q.resize(*r.degree() - dd + 1);
        while (!r.is_zero() && *r.degree() >= dd) {
            std::size_t shift = *r.degree() - dd;
            Rational c = r.leading() / d.leading();
            q[shift] = c;
            r -= (d * c).shifted(shift);
        }
        return {Polynomial(std::move(q)), std::move(r)};
    }

    friend Polynomial gcd(Polynomial a, Polynomial b) {
        while (!b.is_zero()) {
            auto r = a.divmod(b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    /// "c_0 + c_1*z + c_2*z^2"; zero renders as "0".
    [[nodiscard]] std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const Rational& c = coeffs_[i];
            if (c.is_zero()) continue;
            Rational mag = c.abs();
            if (first) os << (c.sign() < 0 ? "-" : "");
            else os << (c.sign() < 0 ? " - " : " + ");
            first = false;
            if (i == 0) { os << mag; continue; }
            if (mag != Rational(1)) os << mag << '*';
            os << Tag::name;
            if (i > 1) os << '^' << i;
        }
        return os.str();
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

struct XiTag { static constexpr const char* name = "xi"; };
struct ZTag { static constexpr const char* name = "z"; };

/// Polynomial in the formal symbol xi; the coefficient ring of class expressions.
using XiPolynomial = Polynomial<XiTag>;
/// Polynomial in the affine coordinate z of the source line.
using ZPolynomial = Polynomial<ZTag>;

}  // namespace singclass
