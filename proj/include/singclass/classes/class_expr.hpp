#pragma once

#include "singclass/exact/polynomial.hpp"
#include "singclass/exact/rational.hpp"
#include "singclass/trees/marked_tree.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace singclass {

/// One displayed monomial: coeff * xi^xi_power * [tree].
struct ClassMonomial {
    Rational coeff;
    std::size_t xi_power;
    MarkedTree tree;
};

/// Homogeneous linear combination of tree classes in one basis with
/// coefficients in Q[xi]. Every stored tree is point-normalized and
/// non-vanishing, and xi-degree + codim(tree) equals codim() for every
/// monomial.
class ClassExpr {
public:
    ClassExpr(Basis basis, int codim) : basis_(basis), codim_(codim) {
        if (codim < 0) throw std::invalid_argument("ClassExpr: negative codimension");
    }

    /// The unit class (the stick marked 0 in either basis).
    static ClassExpr unit(Basis basis) { return single(basis, MarkedTree::stick(0)); }

    /// coeff * xi^xi_power * [tree].
    static ClassExpr single(Basis basis, const MarkedTree& tree, const Rational& coeff = 1, std::size_t xi_power = 0) {
        ClassExpr e(basis, tree.codim() + static_cast<int>(xi_power));
        e.add_term(tree, XiPolynomial::monomial(coeff, xi_power));
        return e;
    }

    [[nodiscard]] Basis basis() const { return basis_; }
    [[nodiscard]] int codim() const { return codim_; }
    [[nodiscard]] const std::map<MarkedTree, XiPolynomial>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }

    [[nodiscard]] XiPolynomial coefficient(const MarkedTree& t) const {
        auto it = terms_.find(t.point_normalized());
        return it == terms_.end() ? XiPolynomial{} : it->second;
    }

    /// Adds coeff * [tree]. Vanishing trees are dropped; top-degree trees are
    /// rewritten as stars first.
    void add_term(const MarkedTree& tree, const XiPolynomial& coeff) {
        if (coeff.is_zero() || tree.vanishes()) return;
        MarkedTree t = tree.point_normalized();
        const int xi_deg = codim_ - t.codim();
        if (xi_deg < 0 || !coeff.is_monomial() || *coeff.degree() != static_cast<std::size_t>(xi_deg))
            throw std::invalid_argument("ClassExpr: inhomogeneous term " + coeff.str() + " * " + t.encoding() +
                                        " in an expression of codimension " + std::to_string(codim_));
        auto [it, inserted] = terms_.try_emplace(std::move(t), coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    ClassExpr& operator+=(const ClassExpr& o) { return accumulate(o, Rational(1)); }
    ClassExpr& operator-=(const ClassExpr& o) { return accumulate(o, Rational(-1)); }
    /// this += factor * o
    ClassExpr& accumulate(const ClassExpr& o, const Rational& factor) {
        if (o.basis_ != basis_) throw std::invalid_argument("ClassExpr: adding expressions in different bases");
        if (o.is_zero() || factor.is_zero()) return *this;
        if (is_zero()) codim_ = o.codim_;
        if (o.codim_ != codim_)
            throw std::invalid_argument("ClassExpr: adding codimension " + std::to_string(o.codim_) + " to " +
                                        std::to_string(codim_));
        for (const auto& [t, c] : o.terms_) add_term(t, c * factor);
        return *this;
    }

    friend ClassExpr operator+(ClassExpr a, const ClassExpr& b) { return a += b; }
    friend ClassExpr operator-(ClassExpr a, const ClassExpr& b) { return a -= b; }
    friend ClassExpr operator*(ClassExpr a, const Rational& c) {
        if (c.is_zero()) return ClassExpr(a.basis_, a.codim_);
        for (auto& [t, p] : a.terms_) p *= c;
        return a;
    }
    friend ClassExpr operator*(const Rational& c, ClassExpr a) { return std::move(a) * c; }

    /// Multiplication by xi^k.
    [[nodiscard]] ClassExpr times_xi(std::size_t k = 1) const {
        ClassExpr out(basis_, codim_ + static_cast<int>(k));
        for (const auto& [t, c] : terms_) out.terms_.emplace(t, c.shifted(k));
        return out;
    }

    /// Multiplication by psi. On trees with at least two leaves it raises the
    /// marking of the root-adjacent vertex (terms that start to vanish are
    /// dropped). In the basic basis the stick psi^m becomes psi^{m+1}; in the
    /// singularity basis psi times a_m is not a tree class and throws.
    [[nodiscard]] ClassExpr times_psi() const {
        ClassExpr out(basis_, codim_ + 1);
        for (const auto& [t, c] : terms_) {
            if (t.is_stick()) {
                if (basis_ == Basis::singularity)
                    throw std::logic_error("ClassExpr: psi * a_m has no tree representative");
                out.add_term(MarkedTree::stick(t.top().marking + 1), c);
            } else {
                out.add_term(t.with_top_marking_added(1), c);
            }
        }
        return out;
    }

    /// Monomials in display order: ascending xi power, then descending tree
    /// weight, then canonical encoding.
    [[nodiscard]] std::vector<ClassMonomial> monomials() const {
        std::vector<ClassMonomial> out;
        for (const auto& [t, c] : terms_) {
            const auto& cs = c.coefficients();
            for (std::size_t e = 0; e < cs.size(); ++e)
                if (!cs[e].is_zero()) out.push_back({cs[e], e, t});
        }
        std::stable_sort(out.begin(), out.end(), [](const ClassMonomial& a, const ClassMonomial& b) {
            if (a.xi_power != b.xi_power) return a.xi_power < b.xi_power;
            if (a.tree.weight() != b.tree.weight()) return a.tree.weight() > b.tree.weight();
            return a.tree.encoding() < b.tree.encoding();
        });
        return out;
    }

    /// Equal as linear combinations; the zero expression equals any zero.
    friend bool operator==(const ClassExpr& a, const ClassExpr& b) {
        if (a.is_zero() && b.is_zero()) return a.basis_ == b.basis_;
        return a.basis_ == b.basis_ && a.codim_ == b.codim_ && a.terms_ == b.terms_;
    }

private:
    Basis basis_;
    int codim_;
    std::map<MarkedTree, XiPolynomial> terms_;
};

}  // namespace singclass
