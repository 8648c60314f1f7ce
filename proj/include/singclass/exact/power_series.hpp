#pragma once

#include "singclass/exact/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace singclass {

/// Truncated power series in z over the rationals. Coefficients are known up
/// to and including z^order; anything above is unknown, and reading it throws.
class PowerSeries {
public:
    explicit PowerSeries(std::size_t order) : coeffs_(order + 1) {}
    PowerSeries(std::vector<Rational> coeffs, std::size_t order) : coeffs_(order + 1) {
        for (std::size_t i = 0; i < coeffs.size() && i <= order; ++i) coeffs_[i] = std::move(coeffs[i]);
    }

    static PowerSeries constant(const Rational& c, std::size_t order) {
        PowerSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }

    [[nodiscard]] std::size_t order() const { return coeffs_.size() - 1; }

    [[nodiscard]] const Rational& coeff(std::size_t n) const {
        if (n > order())
            throw std::out_of_range("PowerSeries: coefficient z^" + std::to_string(n) +
                                    " beyond truncation order " + std::to_string(order()));
        return coeffs_[n];
    }

    PowerSeries& operator*=(const Rational& c) {
        for (auto& x : coeffs_) x *= c;
        return *this;
    }

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
        PowerSeries out(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i <= out.order(); ++i) out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
        return out;
    }

    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        PowerSeries out(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i <= out.order(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j <= out.order(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return out;
    }
    friend PowerSeries operator*(PowerSeries a, const Rational& c) { return a *= c; }

    [[nodiscard]] PowerSeries pow(unsigned e) const {
        PowerSeries result = constant(1, order());
        for (unsigned i = 0; i < e; ++i) result = result * *this;
        return result;
    }

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// sinh(z/2)/(z/2) = sum_n (z/2)^{2n} / (2n+1)!, truncated at z^order.
inline PowerSeries s_series(std::size_t order) {
    if (order < 1) throw std::invalid_argument("s_series: order must be at least 1");
    std::vector<Rational> cs(order + 1);
    for (std::size_t n = 0; n <= order; n += 2)
        cs[n] = Rational(1) / (Rational(2).pow(static_cast<unsigned>(n)) * Rational::factorial(static_cast<unsigned>(n + 1)));
    return PowerSeries(std::move(cs), order);
}

/// s(k z): the z^n coefficient is scaled by k^n.
inline PowerSeries series_scale_arg(const PowerSeries& s, long k) {
    if (k < 1) throw std::invalid_argument("series_scale_arg: k must be positive");
    std::vector<Rational> cs(s.order() + 1);
    Rational scale(1);
    for (std::size_t n = 0; n <= s.order(); ++n) {
        cs[n] = s.coeff(n) * scale;
        scale *= Rational(k);
    }
    return PowerSeries(std::move(cs), s.order());
}

}  // namespace singclass
