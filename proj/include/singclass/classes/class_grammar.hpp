#pragma once

#include "singclass/classes/class_expr.hpp"
#include "singclass/parse_error.hpp"
#include "singclass/trees/tree_grammar.hpp"

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace singclass {

namespace detail {

// One product coeff * xi^xi * psi^psi * [atom] before the basis is settled.
struct PendingTerm {
    Rational coeff{1};
    int xi = 0;
    int psi = 0;
    std::optional<MarkedTree> atom;
    std::optional<Basis> basis;  // unset: neutral (scalars, xi, the unit)
    std::size_t position = 0;

    static PendingTerm at(std::size_t pos) {
        PendingTerm t;
        t.position = pos;
        return t;
    }
};

using PendingSum = std::vector<PendingTerm>;

class ClassParser {
public:
    explicit ClassParser(std::string_view text) : text_(text) {}

    PendingSum parse() {
        PendingSum out = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return out;
    }

private:
    PendingSum parse_sum() {
        PendingSum out;
        skip_ws();
        bool negate = false;
        if (peek() == '+' || peek() == '-') negate = text_[pos_++] == '-';
        while (true) {
            PendingSum term = parse_product();
            for (auto& t : term) {
                if (negate) t.coeff = -t.coeff;
                out.push_back(std::move(t));
            }
            skip_ws();
            if (peek() != '+' && peek() != '-') break;
            negate = text_[pos_++] == '-';
        }
        return out;
    }

    PendingSum parse_product() {
        PendingSum acc = parse_power();
        skip_ws();
        while (peek() == '*') {
            ++pos_;
            acc = multiply(acc, parse_power());
            skip_ws();
        }
        return acc;
    }

    PendingSum parse_power() {
        PendingSum base = parse_primary();
        skip_ws();
        if (peek() != '^') return base;
        ++pos_;
        skip_ws();
        const std::size_t at = pos_;
        const int e = parse_int();
        PendingSum out{PendingTerm::at(at)};
        for (int i = 0; i < e; ++i) out = multiply(out, base);
        return out;
    }

    PendingSum parse_primary() {
        skip_ws();
        const std::size_t at = pos_;
        PendingTerm t = PendingTerm::at(at);
        if (peek() == '(') {
            ++pos_;
            PendingSum inner = parse_sum();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string num = digits();
            if (peek() == '/') {
                ++pos_;
                std::string den = digits();
                if (den.empty()) fail("expected a denominator");
                if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
                num += "/" + den;
            }
            t.coeff = Rational::parse(num);
            return {t};
        }
        if (accept("xi")) {
            t.xi = 1;
            return {t};
        }
        if (accept("psi")) {
            t.psi = 1;
            return {t};
        }
        if (accept("a_")) {
            const int m = parse_int();
            if (m > 0) {
                t.atom = MarkedTree::stick(m);
                t.basis = Basis::singularity;
            }
            return {t};
        }
        if (accept("i[")) {
            std::vector<int> leaves;
            for (int k : parse_int_list()) {
                if (k < 1) fail("i[...] indices must be positive");
                leaves.push_back(k - 1);
            }
            if (leaves.size() < 2) fail("i[...] needs at least two indices");
            t.atom = MarkedTree::star(0, leaves);
            t.basis = Basis::singularity;
            return {t};
        }
        if (accept("d[")) {
            std::vector<int> leaves = parse_int_list();
            if (leaves.size() < 2) fail("d[...] needs at least two indices");
            t.atom = MarkedTree::star(0, leaves);
            t.basis = Basis::basic;
            return {t};
        }
        if (accept("T{")) {
            const std::size_t close = text_.find('}', pos_);
            if (close == std::string_view::npos) fail("unterminated T{...}");
            MarkedTree tree = [&] {
                try {
                    return parse_tree(text_.substr(pos_, close - pos_), pos_);
                } catch (const std::invalid_argument& e) {
                    fail(e.what());
                }
            }();
            pos_ = close + 1;
            if (accept("@sing")) t.basis = Basis::singularity;
            else if (accept("@basic")) t.basis = Basis::basic;
            else fail("expected @sing or @basic after T{...}");
            if (tree.is_stick() && tree.top().marking == 0) t.basis.reset();
            else if (tree.is_stick() && *t.basis == Basis::basic) t.psi = tree.top().marking;
            else t.atom = tree;
            return {t};
        }
        fail(pos_ < text_.size() ? "unexpected character '" + std::string(1, text_[pos_]) + "'"
                                 : "unexpected end of input");
    }

    PendingSum multiply(const PendingSum& a, const PendingSum& b) const {
        PendingSum out;
        for (const auto& x : a)
            for (const auto& y : b) {
                PendingTerm t = PendingTerm::at(std::min(x.position, y.position));
                t.coeff = x.coeff * y.coeff;
                t.xi = x.xi + y.xi;
                t.psi = x.psi + y.psi;
                if (x.atom && y.atom)
                    throw ParseError("product of two tree classes is not defined", y.position);
                t.atom = x.atom ? x.atom : y.atom;
                if (x.basis && y.basis && *x.basis != *y.basis)
                    throw ParseError("factors from different bases", y.position);
                t.basis = x.basis ? x.basis : y.basis;
                out.push_back(std::move(t));
            }
        return out;
    }

    std::vector<int> parse_int_list() {
        std::vector<int> xs{parse_int()};
        skip_ws();
        while (peek() == ',') {
            ++pos_;
            xs.push_back(parse_int());
            skip_ws();
        }
        expect(']');
        return xs;
    }

    std::string digits() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    int parse_int() {
        skip_ws();
        std::string d = digits();
        if (d.empty()) fail("expected a nonnegative integer");
        if (d.size() > 6) fail("integer out of range");
        return std::stoi(d);
    }

    bool accept(std::string_view word) {
        skip_ws();
        if (text_.substr(pos_, word.size()) != word) return false;
        pos_ += word.size();
        return true;
    }
    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the class grammar. Atoms i[..], a_m (m >= 1) and T{..}@sing are
/// singularity classes; d[..], T{..}@basic and a bare psi^p are basic. psi^p in
/// front of a tree atom raises its root-adjacent marking. Scalars, xi and the
/// unit a_0 fit either basis; an expression made only of those lands in
/// `neutral_basis`.
inline ClassExpr parse_class(std::string_view text, Basis neutral_basis = Basis::singularity) {
    detail::PendingSum terms = detail::ClassParser(text).parse();

    std::optional<Basis> basis;
    for (const auto& t : terms) {
        const bool basic_psi = t.psi > 0 && !t.atom;
        std::optional<Basis> b = basic_psi ? std::optional(Basis::basic) : t.basis;
        if (basic_psi && t.basis == Basis::singularity)
            throw ParseError("psi times a_m has no tree representative", t.position);
        if (!b) continue;
        if (basis && *basis != *b) throw ParseError("expression mixes singularity and basic atoms", t.position);
        basis = b;
    }
    const Basis target = basis.value_or(neutral_basis);

    std::optional<ClassExpr> out;
    for (const auto& t : terms) {
        if (t.coeff.is_zero()) continue;
        MarkedTree tree = MarkedTree::stick(0);
        if (t.atom) {
            if (t.atom->is_stick()) {
                if (t.psi > 0) throw ParseError("psi times a_m has no tree representative", t.position);
                tree = *t.atom;
            } else {
                tree = t.atom->with_top_marking_added(t.psi);
            }
        } else if (t.psi > 0) {
            tree = MarkedTree::stick(t.psi);
        }
        const int codim = tree.codim() + t.xi;
        if (!out) out.emplace(target, codim);
        if (out->codim() != codim)
            throw ParseError("inhomogeneous expression: codimension " + std::to_string(codim) + " after " +
                                 std::to_string(out->codim()),
                             t.position);
        out->add_term(tree, XiPolynomial::monomial(t.coeff, static_cast<std::size_t>(t.xi)));
    }
    return out ? *out : ClassExpr(target, 0);
}

}  // namespace singclass
