#pragma once

#include "verify_suites.hpp"

#include "singclass/combinatorics/characters.hpp"
#include "singclass/local_models/hurwitz.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#ifndef SINGCLASS_FIXTURE_DIR
#define SINGCLASS_FIXTURE_DIR "fixtures/appendix"
#endif

namespace singclass::cli {

enum ExitCode : int { success = 0, verification_failed = 1, parse_failed = 2, constraint_violated = 3 };

inline constexpr int kDefaultMaxCodim = 8;

namespace detail {

using Json = nlohmann::ordered_json;

inline int max_codim_from_env() {
    const char* raw = std::getenv("SINGCLASS_MAX_CODIM");
    if (!raw || !*raw) return kDefaultMaxCodim;
    const std::string s(raw);
    if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 6)
        throw ParseError("SINGCLASS_MAX_CODIM must be a nonnegative integer, got '" + s + "'", 0);
    return std::stoi(s);
}

inline void require_codim(int codim, int cap, const std::string& what) {
    if (codim > cap)
        throw ConstraintError(what + " has codimension " + std::to_string(codim) + " above SINGCLASS_MAX_CODIM=" +
                              std::to_string(cap));
}

inline std::string latex_rational(const Rational& r) {
    if (r.is_integer()) return r.str();
    return std::string(r.sign() < 0 ? "-" : "") + "\\frac{" + r.abs().numerator().get_str() + "}{" +
           r.denominator().get_str() + "}";
}

template <class Symbol>
std::string latex_profile_sum(const ProfileSum<Symbol>& s, bool cycles) {
    if (s.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [p, c] : s.ordered()) {
        const bool negative = c.sign() < 0;
        out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
        first = false;
        std::string mono;
        if (cycles) {
            mono = "C_{";
            for (std::size_t i = 0; i < p.length(); ++i) mono += (i ? "," : "") + std::to_string(p.parts()[i]);
            mono += "}";
        } else {
            for (auto [k, mult] : p.multiplicities())
                mono += "x_{" + std::to_string(k) + "}" + (mult > 1 ? "^{" + std::to_string(mult) + "}" : "");
        }
        const Rational mag = c.abs();
        if (mag != Rational(1) || mono.empty()) out += latex_rational(mag) + (mono.empty() ? "" : " ");
        out += mono;
    }
    return out;
}

inline std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    singclass::detail::ListScanner s(text);
    do {
        const bool negative = s.accept('-');
        if (!negative) s.accept('+');
        Rational r = s.rational();
        out.push_back(negative ? -r : r);
    } while (s.accept(','));
    if (!s.at_end()) s.fail("unexpected trailing input");
    return out;
}

inline Rational parse_rational(const std::string& text) {
    auto xs = parse_rational_list(text);
    if (xs.size() != 1) throw ParseError("expected a single rational number", 0);
    return xs.front();
}

}  // namespace detail

/// Runs one command line; everything rendered goes to `out`, diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Singularity and basic class expansions, completed cycles and Hurwitz coordinates", "singclass"};
    app.require_subcommand(1, 1);

    std::string format = "text";
    std::string fixtures = SINGCLASS_FIXTURE_DIR;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
    app.add_option("--fixtures", fixtures, "Directory of appendix fixture files");

    int m = 0;
    std::string expr, p1, p2, lambda_text, mu_text, x_text, poles_text, ms_text, suite;
    bool genus0 = false, raw = false;
    std::optional<int> verify_at, max_m;

    auto* product = app.add_subcommand("product", "prod_{r=1}^m (r psi - xi) in singularity classes");
    product->add_option("m", m)->required();
    auto* psi = app.add_subcommand("psi", "psi^m in singularity classes");
    psi->add_option("m", m)->required();
    auto* to_sing = app.add_subcommand("to-sing", "Convert a basic-class expression to singularity classes");
    to_sing->add_option("expr", expr)->required();
    auto* to_basic = app.add_subcommand("to-basic", "Convert a singularity-class expression to basic classes");
    to_basic->add_option("expr", expr)->required();
    auto* cycle = app.add_subcommand("completed-cycle", "Completed (m+1)-cycle");
    cycle->add_option("m", m)->required();
    cycle->add_flag("--genus0", genus0, "Keep only the terms of maximal order");
    auto* xpoly = app.add_subcommand("x-poly", "The polynomial X_m, divided by m! unless --raw");
    xpoly->add_option("m", m)->required();
    xpoly->add_flag("--raw", raw, "Do not divide by m!");
    auto* multiply = app.add_subcommand("multiply-cycles", "Product of two stable central elements");
    multiply->add_option("P1", p1)->required();
    multiply->add_option("P2", p2)->required();
    multiply->add_option("--verify-at", verify_at, "Also check the product in the group algebra of S_N");
    auto* chr = app.add_subcommand("char", "Irreducible character chi^lambda(mu)");
    chr->add_option("lambda", lambda_text)->required();
    chr->add_option("mu", mu_text)->required();
    auto* coeff = app.add_subcommand("coeff", "Point-class coefficients");
    coeff->require_subcommand(1, 1);
    auto* coeff_psi = coeff->add_subcommand("psi", "Coefficient of alpha_l i_k in psi^m");
    coeff_psi->add_option("m", m)->required();
    coeff_psi->add_option("k", p1)->required();
    coeff_psi->add_flag("--raw", raw, "Literal m!/(m-l+2)! normalization");
    auto* coeff_delta = coeff->add_subcommand("delta", "Coefficient of alpha_l i_k in alpha_s delta_{m_1..m_s}");
    coeff_delta->add_option("ms", ms_text)->required();
    coeff_delta->add_option("k", p1)->required();
    auto* local = app.add_subcommand("local-model", "Canonical function and its Hurwitz coordinates");
    local->add_option("P", p1)->required();
    local->add_option("x", x_text)->required();
    local->add_option("poles", poles_text)->required();
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite)
        ->required()
        ->check(CLI::IsMember({"appendix", "ko", "equality", "cycles", "roundtrip"}));
    verify->add_option("--max-m", max_m, "Largest m (or codimension) to check");

    std::vector<const char*> argv{"singclass"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return parse_failed;
    }

    using detail::Json;
    auto emit_class = [&](const ClassExpr& e) {
        if (format == "json") out << to_json(e).dump(2) << "\n";
        else if (format == "latex") out << to_latex(e) << "\n";
        else out << to_text(e) << "\n";
    };
    auto emit_cycles = [&](const CycleExpr& c) {
        if (format == "json") out << c.json().dump(2) << "\n";
        else if (format == "latex") out << detail::latex_profile_sum(c, true) << "\n";
        else out << c.str() << "\n";
    };
    auto emit_scalar = [&](const Rational& r) {
        if (format == "json") out << Json{{"value", r.str()}}.dump(2) << "\n";
        else if (format == "latex") out << detail::latex_rational(r) << "\n";
        else out << r.str() << "\n";
    };
    auto emit_report = [&](const SuiteReport& report) {
        if (format == "json") {
            Json j{{"suite", report.suite},
                   {"passed", report.checks.size() - report.failed()},
                   {"failed", report.failed()},
                   {"checks", Json::array()}};
            for (const auto& c : report.checks) j["checks"].push_back({{"name", c.name}, {"ok", c.ok}, {"diff", c.diff}});
            out << j.dump(2) << "\n";
        } else {
            for (const auto& c : report.checks) {
                out << (c.ok ? "PASS " : "FAIL ") << c.name << "\n";
                for (const auto& d : c.diff) out << "    " << d << "\n";
            }
            out << report.suite << ": " << report.checks.size() - report.failed() << "/" << report.checks.size()
                << " checks passed\n";
        }
        return report.failed() == 0 ? success : verification_failed;
    };

    try {
        const int cap = detail::max_codim_from_env();
        if (product->parsed()) {
            detail::require_codim(m, cap, "product " + std::to_string(m));
            emit_class(theorem1_expansion(m));
        } else if (psi->parsed()) {
            detail::require_codim(m, cap, "psi^" + std::to_string(m));
            emit_class(psi_power_sing(m));
        } else if (to_sing->parsed() || to_basic->parsed()) {
            const bool sing = to_sing->parsed();
            const ClassExpr input = parse_class(expr, sing ? Basis::basic : Basis::singularity);
            if (input.basis() != (sing ? Basis::basic : Basis::singularity))
                throw ConstraintError(std::string("input is in the ") +
                                      (sing ? "singularity" : "basic") + " basis");
            detail::require_codim(input.codim(), cap, "input");
            emit_class(sing ? basic_to_sing(input) : sing_to_basic(input));
        } else if (cycle->parsed()) {
            CycleExpr c = completed_cycle(m);
            emit_cycles(genus0 ? genus0_part(c, m) : c);
        } else if (xpoly->parsed()) {
            const XPolynomial x = x_polynomial(m, !raw);
            if (format == "json") out << x.json().dump(2) << "\n";
            else if (format == "latex") out << detail::latex_profile_sum(x, false) << "\n";
            else out << x.str() << "\n";
        } else if (multiply->parsed()) {
            const Profile a = parse_profile(p1), b = parse_profile(p2);
            const CycleExpr product_expr = multiply_central(a, b);
            emit_cycles(product_expr);
            if (verify_at) {
                const bool ok = verify_in_group_algebra(a, b, product_expr, *verify_at);
                err << (ok ? "verified" : "NOT verified") << " in the group algebra of S_" << *verify_at << "\n";
                if (!ok) return verification_failed;
            }
        } else if (chr->parsed()) {
            const Partition lambda = parse_partition(lambda_text), mu = parse_partition(mu_text);
            if (lambda.size() != mu.size())
                throw ConstraintError("char: |lambda| = " + std::to_string(lambda.size()) + " but |mu| = " +
                                      std::to_string(mu.size()));
            emit_scalar(Rational(mn_character(lambda, mu)));
        } else if (coeff_psi->parsed()) {
            emit_scalar(point_coefficient_psi(m, parse_profile(p1), raw));
        } else if (coeff_delta->parsed()) {
            std::vector<int> ms;
            for (const Rational& r : detail::parse_rational_list(ms_text)) {
                if (!r.is_integer() || r.sign() < 0) throw ParseError("delta indices must be nonnegative integers", 0);
                ms.push_back(static_cast<int>(r.numerator().get_si()));
            }
            emit_scalar(point_coefficient_delta(ms, parse_profile(p1)));
        } else if (local->parsed()) {
            const Profile p = parse_profile(p1);
            const Rational x = detail::parse_rational(x_text);
            const std::vector<Rational> poles = detail::parse_rational_list(poles_text);
            const ProfileConstants k = profile_constants(p);
            const RationalFunction f = canonical_function(p, x, poles);
            const HurwitzCoordinates h = hurwitz_coordinates(f, p, poles);
            if (reassemble(h) != f) {
                err << "reassembly does not reproduce " << f.str() << "\n";
                return verification_failed;
            }
            if (format == "json") {
                Json j{{"function", f.str()}, {"K", k.lcm}, {"r", k.ratios}, {"d", k.components},
                       {"constant", h.constant.str()}, {"branches", Json::array()}};
                for (const auto& b : h.branches) {
                    Json bj{{"pole", b.pole.str()}, {"k", b.order}, {"u_power", b.lead.str()}};
                    bj["u"] = b.root ? Json(b.root->str()) : Json(nullptr);
                    Json scaled = Json::array();
                    for (const auto& s : b.scaled) scaled.push_back(s.str());
                    bj["a_over_u_power"] = scaled;
                    j["branches"].push_back(bj);
                }
                out << j.dump(2) << "\n";
            } else {
                out << "f = " << f.str() << "\n";
                out << "K = " << k.lcm << ", r = (";
                for (std::size_t i = 0; i < k.ratios.size(); ++i) out << (i ? "," : "") << k.ratios[i];
                out << "), d = " << k.components << "\n";
                for (const auto& b : h.branches) {
                    out << "pole " << b.pole.str() << " order " << b.order << ": ";
                    if (b.root) {
                        out << "u = " << b.root->str();
                        for (int j = 1; j < b.order; ++j) out << ", a_" << j << " = " << b.a(j)->str();
                    } else {
                        out << "u^" << b.order << " = " << b.lead.str();
                        for (int j = 1; j < b.order; ++j)
                            out << ", a_" << j << " = " << b.scaled[static_cast<std::size_t>(j)].str() << "*u" << (j > 1 ? "^" + std::to_string(j) : "");
                    }
                    out << "\n";
                }
                out << "constant = " << h.constant.str() << "\n";
            }
        } else if (verify->parsed()) {
            if (suite == "appendix") return emit_report(verify_appendix(fixtures));
            if (suite == "ko") return emit_report(verify_ko(max_m.value_or(5)));
            if (suite == "cycles") return emit_report(verify_cycles(max_m.value_or(3)));
            if (suite == "equality") {
                const int top = max_m.value_or(std::min(6, cap));
                detail::require_codim(top, cap, "psi^" + std::to_string(top));
                return emit_report(verify_equality(top));
            }
            const int top = max_m.value_or(std::min(6, cap));
            detail::require_codim(top, cap, "roundtrip");
            return emit_report(verify_roundtrip(top));
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return parse_failed;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return constraint_violated;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return constraint_violated;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return verification_failed;
    }
    return success;
}

}  // namespace singclass::cli
