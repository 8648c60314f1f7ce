#pragma once

#include "singclass/exact/polynomial.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace singclass {

/// numerator / denominator in z, kept coprime with a monic denominator.
class RationalFunction {
public:
    explicit RationalFunction(ZPolynomial numerator, ZPolynomial denominator = ZPolynomial(Rational(1)))
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
        const ZPolynomial g = gcd(num_, den_);
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
        const Rational lead = den_.leading();
        num_ = num_ * (Rational(1) / lead);
        den_ = den_.monic();
    }

    [[nodiscard]] const ZPolynomial& numerator() const { return num_; }
    [[nodiscard]] const ZPolynomial& denominator() const { return den_; }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    [[nodiscard]] RationalFunction derivative() const {
        return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    [[nodiscard]] Rational evaluate(const Rational& z) const {
        const Rational d = den_.evaluate(z);
        if (d.is_zero()) throw std::domain_error("RationalFunction: evaluation at a pole");
        return num_.evaluate(z) / d;
    }

    /// "poly / poly".
    [[nodiscard]] std::string str() const { return "(" + num_.str() + ") / (" + den_.str() + ")"; }

private:
    ZPolynomial num_;
    ZPolynomial den_;
};

}  // namespace singclass
