#pragma once

#include "singclass/classes/class_expr.hpp"

#include "json.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace singclass {

namespace detail {

inline std::string psi_power_text(int p) {
    if (p == 0) return "";
    return p == 1 ? "psi" : "psi^" + std::to_string(p);
}

inline std::string join_ints(const std::vector<int>& xs, int add) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i] + add);
    return s;
}

}  // namespace detail

/// Atom for a tree in the public grammar; empty string for the unit.
inline std::string tree_atom_text(const MarkedTree& t, Basis basis) {
    const bool sing = basis == Basis::singularity;
    if (t.is_stick()) {
        const int m = t.top().marking;
        if (m == 0) return "";
        return sing ? "a_" + std::to_string(m) : detail::psi_power_text(m);
    }
    if (t.is_star()) {
        std::string psi = detail::psi_power_text(t.top().marking);
        std::string atom = sing ? "i[" + detail::join_ints(t.leaves(), 1) + "]" : "d[" + detail::join_ints(t.leaves(), 0) + "]";
        return psi.empty() ? atom : psi + "*" + atom;
    }
    return "T{" + t.encoding() + "}@" + (sing ? "sing" : "basic");
}

/// "1/2*a_2 + 1/4*i[1,1] + 3/2*xi*a_1 + xi^2"; the zero class renders as "0".
inline std::string to_text(const ClassExpr& e) {
    auto monos = e.monomials();
    if (monos.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < monos.size(); ++i) {
        const auto& m = monos[i];
        const bool negative = m.coeff.sign() < 0;
        if (i == 0) os << (negative ? "-" : "");
        else os << (negative ? " - " : " + ");
        std::vector<std::string> factors;
        Rational mag = m.coeff.abs();
        if (m.xi_power > 0) factors.push_back(m.xi_power == 1 ? "xi" : "xi^" + std::to_string(m.xi_power));
        if (auto atom = tree_atom_text(m.tree, e.basis()); !atom.empty()) factors.push_back(atom);
        if (mag != Rational(1) || factors.empty()) factors.insert(factors.begin(), mag.str());
        for (std::size_t f = 0; f < factors.size(); ++f) os << (f ? "*" : "") << factors[f];
    }
    return os.str();
}

namespace detail {

inline std::string latex_rational(const Rational& r) {
    if (r.is_integer()) return r.str();
    return "\\frac{" + r.numerator().get_str() + "}{" + r.denominator().get_str() + "}";
}

inline std::string latex_atom(const MarkedTree& t, Basis basis) {
    const bool sing = basis == Basis::singularity;
    auto sub = [](const std::vector<int>& xs, int add) {
        std::string s;
        for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i] + add);
        return s;
    };
    if (t.is_stick()) {
        const int m = t.top().marking;
        if (m == 0) return "";
        if (sing) return "a_{" + std::to_string(m) + "}";
        return m == 1 ? "\\psi" : "\\psi^{" + std::to_string(m) + "}";
    }
    if (t.is_star()) {
        const int p = t.top().marking;
        std::string psi = p == 0 ? "" : p == 1 ? "\\psi " : "\\psi^{" + std::to_string(p) + "} ";
        return psi + (sing ? "i_{" + sub(t.leaves(), 1) + "}" : "\\delta_{" + sub(t.leaves(), 0) + "}");
    }
    return "[\\texttt{" + t.encoding() + "}]_{\\rm " + (sing ? "sing" : "basic") + "}";
}

}  // namespace detail

inline std::string to_latex(const ClassExpr& e) {
    auto monos = e.monomials();
    if (monos.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < monos.size(); ++i) {
        const auto& m = monos[i];
        const bool negative = m.coeff.sign() < 0;
        if (i == 0) os << (negative ? "-" : "");
        else os << (negative ? " - " : " + ");
        Rational mag = m.coeff.abs();
        std::string atom = detail::latex_atom(m.tree, e.basis());
        std::string xi = m.xi_power == 0 ? "" : m.xi_power == 1 ? "\\xi" : "\\xi^{" + std::to_string(m.xi_power) + "}";
        std::string body = xi + (xi.empty() || atom.empty() ? "" : " ") + atom;
        if (mag != Rational(1) || body.empty()) os << detail::latex_rational(mag) << (body.empty() ? "" : " ");
        os << body;
    }
    return os.str();
}

/// {"basis": ..., "codim": n, "terms": [{"coeff": "p/q", "xi_power": e, "tree": "..."}]}
inline nlohmann::ordered_json to_json(const ClassExpr& e) {
    nlohmann::ordered_json j;
    j["basis"] = basis_name(e.basis());
    j["codim"] = e.codim();
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& m : e.monomials())
        j["terms"].push_back({{"coeff", m.coeff.str()}, {"xi_power", m.xi_power}, {"tree", m.tree.encoding()}});
    return j;
}

}  // namespace singclass
