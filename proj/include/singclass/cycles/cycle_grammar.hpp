#pragma once

#include "singclass/cycles/cycle_expr.hpp"
#include "singclass/parse_error.hpp"

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace singclass {

namespace detail {

class ListScanner {
public:
    ListScanner(std::string_view text, std::size_t pos = 0) : text_(text), pos_(pos) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    bool at_end() { return peek() == '\0'; }

    std::string digits() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }
    int integer() {
        std::string d = digits();
        if (d.empty()) fail("expected an integer");
        if (d.size() > 6) fail("integer out of range");
        return std::stoi(d);
    }
    Rational rational() {
        std::string num = digits();
        if (num.empty()) fail("expected a rational number");
        if (accept('/')) {
            std::string den = digits();
            if (den.empty()) fail("expected a denominator");
            if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
            num += "/" + den;
        }
        return Rational::parse(num);
    }
    /// Comma-separated integers up to (not including) `close`; may be empty.
    std::vector<int> int_list(char close) {
        std::vector<int> xs;
        if (peek() == close) return xs;
        xs.push_back(integer());
        while (accept(',')) xs.push_back(integer());
        return xs;
    }

    [[nodiscard]] std::size_t pos() const { return pos_; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

private:
    std::string_view text_;
    std::size_t pos_;
};

}  // namespace detail

/// "{1,2,2}", "[1,2,2]", "1,2,2" or "{}" (the empty profile).
inline Profile parse_profile(std::string_view text) {
    detail::ListScanner s(text);
    const char open = s.peek();
    const char close = open == '{' ? '}' : open == '[' ? ']' : '\0';
    if (close) s.expect(open);
    std::vector<int> parts = s.int_list(close);
    if (close) s.expect(close);
    if (!s.at_end()) s.fail("unexpected trailing input");
    for (int k : parts)
        if (k < 1) throw ParseError("profile parts must be positive", 0);
    return Profile(std::move(parts));
}

/// "[3,1,1]" or "3,1,1"; parts are sorted into decreasing order.
inline Partition parse_partition(std::string_view text) {
    detail::ListScanner s(text);
    const bool bracket = s.accept('[');
    std::vector<int> parts = s.int_list(bracket ? ']' : '\0');
    if (bracket) s.expect(']');
    if (!s.at_end()) s.fail("unexpected trailing input");
    for (int k : parts)
        if (k < 1) throw ParseError("partition rows must be positive", 0);
    return Partition::from_parts(std::move(parts));
}

/// "1/2*C[3] + 1/4*C[1,1] - C[]"; a bare rational is a multiple of C[].
inline CycleExpr parse_cycle(std::string_view text) {
    detail::ListScanner s(text);
    CycleExpr out;
    bool negate = s.accept('-');
    if (!negate) s.accept('+');
    while (true) {
        Rational coeff(1);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(s.peek()))) {
            coeff = s.rational();
            have_coeff = true;
        }
        Profile p;
        if (!have_coeff || s.accept('*')) {
            if (!s.accept('C')) s.fail("expected C[...]");
            s.expect('[');
            std::vector<int> parts = s.int_list(']');
            s.expect(']');
            for (int k : parts)
                if (k < 1) s.fail("profile parts must be positive");
            p = Profile(std::move(parts));
        }
        out.add(p, negate ? -coeff : coeff);
        if (s.at_end()) break;
        if (s.accept('+')) negate = false;
        else if (s.accept('-')) negate = true;
        else s.fail("expected '+' or '-'");
    }
    return out;
}

}  // namespace singclass
