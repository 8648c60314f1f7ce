#pragma once

#include "singclass/classes/class_grammar.hpp"
#include "singclass/classes/conversions.hpp"
#include "singclass/classes/expansions.hpp"
#include "singclass/classes/point_coefficients.hpp"
#include "singclass/classes/render.hpp"
#include "singclass/cycles/completed_cycles.hpp"
#include "singclass/cycles/cycle_grammar.hpp"
#include "singclass/cycles/equality.hpp"
#include "singclass/cycles/group_algebra.hpp"
#include "singclass/cycles/products.hpp"
#include "singclass/trees/enumerate.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace singclass::cli {

struct Check {
    std::string name;
    bool ok = true;
    std::vector<std::string> diff;
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;

    [[nodiscard]] std::size_t failed() const {
        return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.ok; }));
    }
};

namespace detail {

inline std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string piece;
    while (std::getline(ss, piece, sep)) out.push_back(trim(piece));
    return out;
}

// Text of one monomial coeff * xi^e * [tree] in the given basis.
inline std::string monomial_text(Basis basis, const MarkedTree& tree, const Rational& c, std::size_t e) {
    return to_text(ClassExpr::single(basis, tree, c, e));
}

// Term-by-term differences between two class expressions.
inline std::vector<std::string> class_diff(const ClassExpr& expected, const ClassExpr& computed) {
    std::vector<std::string> out;
    if (expected.basis() != computed.basis()) {
        out.push_back(std::string("basis: expected ") + basis_name(expected.basis()) + ", computed " +
                      basis_name(computed.basis()));
        return out;
    }
    std::map<std::pair<std::size_t, MarkedTree>, std::pair<Rational, Rational>> table;
    for (const auto& m : expected.monomials()) table[{m.xi_power, m.tree}].first = m.coeff;
    for (const auto& m : computed.monomials()) table[{m.xi_power, m.tree}].second = m.coeff;
    for (const auto& [key, values] : table) {
        const auto& [exp, got] = values;
        if (exp == got) continue;
        const Basis b = expected.basis();
        out.push_back("expected " + (exp.is_zero() ? "no term" : monomial_text(b, key.second, exp, key.first)) +
                      ", computed " + (got.is_zero() ? "no term" : monomial_text(b, key.second, got, key.first)));
    }
    return out;
}

inline std::vector<std::string> cycle_diff(const CycleExpr& expected, const CycleExpr& computed) {
    std::vector<std::string> out;
    std::map<Profile, std::pair<Rational, Rational>> table;
    for (const auto& [p, c] : expected.terms()) table[p].first = c;
    for (const auto& [p, c] : computed.terms()) table[p].second = c;
    for (const auto& [p, values] : table)
        if (values.first != values.second)
            out.push_back(CycleExpr::single(p).str() + ": expected " + values.first.str() +
                          ", computed " + values.second.str());
    return out;
}

// Star and stick terms of e, and the coefficient texts of its remaining
// (nested) terms, sorted.
inline std::pair<ClassExpr, std::vector<std::string>> split_nested(const ClassExpr& e) {
    ClassExpr scalar(e.basis(), e.codim());
    std::vector<std::string> nested;
    for (const auto& m : e.monomials()) {
        if (m.tree.is_stick() || m.tree.is_star()) {
            scalar.add_term(m.tree, XiPolynomial::monomial(m.coeff, m.xi_power));
        } else {
            nested.push_back(to_text(ClassExpr::single(e.basis(), MarkedTree::stick(0), m.coeff, m.xi_power)));
        }
    }
    std::sort(nested.begin(), nested.end());
    return {scalar, nested};
}

inline ClassExpr evaluate_class_row(const std::string& op, const std::string& arg) {
    if (op == "product") return theorem1_expansion(std::stoi(arg));
    if (op == "psi") return psi_power_sing(std::stoi(arg));
    if (op == "to-sing") return basic_to_sing(parse_class(arg, Basis::basic));
    if (op == "to-basic") return sing_to_basic(parse_class(arg, Basis::singularity));
    throw ParseError("unknown fixture operation '" + op + "'", 0);
}

// alpha_s delta rows: every point term must carry the coefficient of the
// product of normalized X polynomials, and every nonzero such coefficient must
// appear.
inline void point_check(const std::string& name, const ClassExpr& lhs, const ClassExpr& image, SuiteReport& report) {
    if (lhs.size() != 1 || lhs.terms().begin()->second.degree() != std::optional<std::size_t>(0)) return;
    const MarkedTree& tree = lhs.terms().begin()->first;
    if (!tree.is_star() || tree.top().marking != static_cast<int>(tree.leaf_count()) - 2) return;
    Check check{"point " + name, true, {}};
    const auto extracted = point_terms(image);
    const std::vector<int> ms = tree.leaves();
    const int order = 2 * static_cast<int>(ms.size()) + tree.weight();
    std::map<Profile, Rational> predicted;
    for (int total = 1; total < order; ++total)
        for (const Profile& p : profiles_with_sum(total, 1))
            if (p.order() == order)
                if (Rational c = point_coefficient_delta(ms, p); !c.is_zero()) predicted.emplace(p, c);
    if (predicted != extracted) {
        check.ok = false;
        for (const auto& [p, c] : predicted) {
            auto it = extracted.find(p);
            if (it == extracted.end() || it->second != c)
                check.diff.push_back("k=" + p.str() + ": X product " + c.str() + ", extracted " +
                                     (it == extracted.end() ? "0" : it->second.str()));
        }
        for (const auto& [p, c] : extracted)
            if (!predicted.count(p)) check.diff.push_back("k=" + p.str() + ": X product 0, extracted " + c.str());
    }
    report.checks.push_back(std::move(check));
}

}  // namespace detail

/// Golden rows from the appendix fixture files, one check per row, plus the
/// point-coefficient check for every alpha_s delta row.
inline SuiteReport verify_appendix(const std::filesystem::path& dir) {
    SuiteReport report{"appendix", {}};
    if (!std::filesystem::is_directory(dir))
        throw ConstraintError("fixture directory " + dir.string() + " does not exist");
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.path().extension() == ".txt") files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    for (const auto& file : files) {
        std::ifstream in(file);
        std::string line;
        for (int lineno = 1; std::getline(in, line); ++lineno) {
            line = detail::trim(line);
            if (line.empty() || line.front() == '#') continue;
            const auto bar = line.find('|');
            if (bar == std::string::npos)
                throw ParseError(file.filename().string() + ":" + std::to_string(lineno) + ": missing '|'", 0);
            const std::string head = detail::trim(line.substr(0, bar));
            const bool partial = bar + 1 < line.size() && line[bar + 1] == '~';
            const std::string body = line.substr(bar + (partial ? 2 : 1));
            const auto space = head.find(' ');
            const std::string op = head.substr(0, space);
            const std::string arg = space == std::string::npos ? "" : detail::trim(head.substr(space + 1));
            const std::string name = file.filename().string() + ":" + std::to_string(lineno) + " " + head;

            Check check{name, true, {}};
            if (op == "completed-cycle") {
                check.diff = detail::cycle_diff(parse_cycle(body), completed_cycle(std::stoi(arg)));
            } else {
                const ClassExpr computed = detail::evaluate_class_row(op, arg);
                const Basis target = op == "to-basic" ? Basis::basic : Basis::singularity;
                if (partial) {
                    const auto parts = detail::split(body, '~');
                    if (parts.size() != 2) throw ParseError(name + ": partial row needs 'scalar ~ coefficients'", 0);
                    auto [scalar, nested] = detail::split_nested(computed);
                    check.diff = detail::class_diff(parse_class(parts[0], target), scalar);
                    std::vector<std::string> want;
                    for (const auto& c : detail::split(parts[1], ';'))
                        want.push_back(to_text(parse_class(c, target)));
                    std::sort(want.begin(), want.end());
                    if (want != nested) {
                        std::string w, g;
                        for (const auto& s : want) w += (w.empty() ? "" : ", ") + s;
                        for (const auto& s : nested) g += (g.empty() ? "" : ", ") + s;
                        check.diff.push_back("nested-tree coefficients: expected {" + w + "}, computed {" + g + "}");
                    }
                } else {
                    check.diff = detail::class_diff(parse_class(body, target), computed);
                }
                if (op == "to-sing") detail::point_check(head, parse_class(arg, Basis::basic), computed, report);
            }
            check.ok = check.diff.empty();
            report.checks.push_back(std::move(check));
        }
    }
    return report;
}

/// evaluate(completed_cycle(m), lambda) = shifted_power_sum(lambda, m) for
/// m <= max_m and every partition of size <= max_size.
inline SuiteReport verify_ko(int max_m, int max_size = 8) {
    SuiteReport report{"ko", {}};
    for (int m = 0; m <= max_m; ++m) {
        const CycleExpr c = completed_cycle(m);
        Check check{"m=" + std::to_string(m) + " |lambda|<=" + std::to_string(max_size), true, {}};
        for (int n = 0; n <= max_size; ++n)
            for (const Partition& lambda : partitions_of(n)) {
                const Rational lhs = evaluate(c, lambda), rhs = shifted_power_sum(lambda, m);
                if (lhs != rhs)
                    check.diff.push_back("lambda=" + lambda.str() + ": cycle " + lhs.str() + ", power sum " + rhs.str());
            }
        check.ok = check.diff.empty();
        report.checks.push_back(std::move(check));
    }
    return report;
}

inline SuiteReport verify_equality(int max_m) {
    SuiteReport report{"equality", {}};
    for (int m = 1; m <= max_m; ++m) {
        Check check{"m=" + std::to_string(m), true, equality1_mismatches(m)};
        check.ok = check.diff.empty();
        report.checks.push_back(std::move(check));
    }
    return report;
}

/// Products of stable central elements: the worked example, every product of
/// profiles of size <= max_size checked in the group algebra at two degrees,
/// top-order multiplicativity, and the genus-0 part of products of completed
/// cycles against products of normalized X polynomials.
inline SuiteReport verify_cycles(int max_size = 3) {
    SuiteReport report{"cycles", {}};
    {
        const CycleExpr claim = parse_cycle("C[2,2] + 3*C[3] + 1/2*C[1,1]");
        const CycleExpr computed = multiply_central({2}, {2});
        Check check{"C[2]*C[2]", true, detail::cycle_diff(claim, computed)};
        for (int n : {4, 5})
            if (!verify_in_group_algebra({2}, {2}, claim, n))
                check.diff.push_back("group algebra check failed at N=" + std::to_string(n));
        check.ok = check.diff.empty();
        report.checks.push_back(std::move(check));
    }
    std::vector<Profile> profiles;
    for (int s = 1; s <= max_size; ++s)
        for (const Profile& p : profiles_with_sum(s, 1)) profiles.push_back(p);
    for (std::size_t i = 0; i < profiles.size(); ++i)
        for (std::size_t j = i; j < profiles.size(); ++j) {
            const Profile &a = profiles[i], &b = profiles[j];
            const CycleExpr product = multiply_central(a, b);
            Check check{CycleExpr::single(a).str() + "*" + CycleExpr::single(b).str(), true, {}};
            const int n0 = a.sum() + b.sum();
            for (int n : {n0, n0 + 1})
                if (n <= singclass::detail::kMaxGroupDegree && !verify_in_group_algebra(a, b, product, n))
                    check.diff.push_back("group algebra check failed at N=" + std::to_string(n));
            const CycleExpr top = genus0_part(product, a.order() + b.order() - 2);
            if (top != CycleExpr::single(a + b)) check.diff.push_back("top-order part is " + top.str());
            check.ok = check.diff.empty();
            report.checks.push_back(std::move(check));
        }
    for (int m1 = 0; m1 <= 2; ++m1)
        for (int m2 = m1; m2 <= 2; ++m2) {
            const CycleExpr product = completed_cycle(m1) * completed_cycle(m2);
            const CycleExpr top = genus0_part(product, m1 + m2 + 2);
            const XPolynomial x = x_polynomial(m1, true) * x_polynomial(m2, true);
            CycleExpr expected;
            for (const auto& [p, c] : x.terms()) expected.add(p, c);
            Check check{"top order of completed cycles " + std::to_string(m1 + 1) + "," + std::to_string(m2 + 1), true,
                        detail::cycle_diff(expected, top)};
            check.ok = check.diff.empty();
            report.checks.push_back(std::move(check));
        }
    return report;
}

/// Both conversions invert each other on every tree of codim <= max_codim,
/// and psi^m expanded and converted back is the stick.
inline SuiteReport verify_roundtrip(int max_codim) {
    SuiteReport report{"roundtrip", {}};
    for (const MarkedTree& t : trees_up_to_codim(max_codim)) {
        Check check{"T{" + t.encoding() + "}", true, {}};
        const ClassExpr basic = ClassExpr::single(Basis::basic, t);
        const ClassExpr sing = ClassExpr::single(Basis::singularity, t);
        for (auto& d : detail::class_diff(basic, sing_to_basic(basic_to_sing(basic)))) check.diff.push_back("basic: " + d);
        for (auto& d : detail::class_diff(sing, basic_to_sing(sing_to_basic(sing)))) check.diff.push_back("sing: " + d);
        check.ok = check.diff.empty();
        report.checks.push_back(std::move(check));
    }
    for (int m = 0; m <= max_codim; ++m) {
        Check check{"psi^" + std::to_string(m), true,
                    detail::class_diff(ClassExpr::single(Basis::basic, MarkedTree::stick(m)), sing_to_basic(psi_power_sing(m)))};
        check.ok = check.diff.empty();
        report.checks.push_back(std::move(check));
    }
    return report;
}

}  // namespace singclass::cli
