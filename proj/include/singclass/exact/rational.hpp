#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace singclass {

/// Exact fraction backed by GMP. Always in lowest terms with a positive
/// denominator; zero is 0/1.
class Rational {
public:
    Rational() = default;
    template <std::integral I>
    Rational(I n) : value_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : value_(n) {}
    explicit Rational(mpq_class q) : value_(std::move(q)) { value_.canonicalize(); }

    /// Parses "p", "-p" or "p/q".
    static Rational parse(std::string_view text) {
        std::string s(text);
        if (s.empty()) throw std::invalid_argument("Rational: empty literal");
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        auto slash = s.find('/');
        auto digits_ok = [&](std::size_t from, std::size_t to) {
            if (from >= to) return false;
            for (std::size_t i = from; i < to; ++i)
                if (s[i] < '0' || s[i] > '9') return false;
            return true;
        };
        bool ok = slash == std::string::npos ? digits_ok(start, s.size())
                                             : digits_ok(start, slash) && digits_ok(slash + 1, s.size());
        if (!ok) throw std::invalid_argument("Rational: malformed literal '" + s + "'");
        if (s[0] == '+') s.erase(0, 1);
        mpq_class q;
        if (slash != std::string::npos) {
            mpz_class den(s.substr(s.find('/') + 1));
            if (den == 0) throw std::domain_error("Rational: zero denominator");
        }
        q.set_str(s, 10);
        q.canonicalize();
        return Rational(std::move(q));
    }

    static Rational factorial(unsigned n) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), n);
        return Rational(f);
    }

    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] const mpq_class& raw() const { return value_; }

    /// "p/q", or "p" when q = 1.
    [[nodiscard]] std::string str() const { return value_.get_str(10); }

    [[nodiscard]] Rational abs() const { return Rational(mpq_class(::abs(value_))); }

    [[nodiscard]] Rational pow(unsigned e) const {
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), e);
        mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), e);
        return Rational(mpq_class(n, d));
    }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class value_{0};
};

/// Exact k-th root when one exists over the rationals. For even k the
/// nonnegative root is returned; negative radicands have none.
inline std::optional<Rational> rational_root(const Rational& x, unsigned k) {
    if (k == 0) throw std::invalid_argument("rational_root: k = 0");
    if (x.is_zero()) return Rational(0);
    if (x.sign() < 0 && k % 2 == 0) return std::nullopt;
    mpz_class n = abs(x.numerator()), d = x.denominator(), rn, rd;
    if (mpz_root(rn.get_mpz_t(), n.get_mpz_t(), k) == 0) return std::nullopt;
    if (mpz_root(rd.get_mpz_t(), d.get_mpz_t(), k) == 0) return std::nullopt;
    Rational root(mpq_class(rn, rd));
    return x.sign() < 0 ? -root : root;
}

}  // namespace singclass

template <>
struct std::hash<singclass::Rational> {
    std::size_t operator()(const singclass::Rational& r) const { return std::hash<std::string>{}(r.str()); }
};
