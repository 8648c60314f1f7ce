#pragma once

#include "singclass/cycles/cycle_expr.hpp"
#include "singclass/exact/power_series.hpp"
#include "singclass/parse_error.hpp"

#include <vector>

namespace singclass {

/// X_m = sum over multisets k with sum k_i = m - l + 2 of
/// (1/|Aut k|) (m!/(m-l+2)!) prod k_i x_{k_1}...x_{k_l}. The normalized
/// variant is X_m / m!.
inline XPolynomial x_polynomial(int m, bool normalized) {
    if (m < 0) throw ConstraintError("x_polynomial: m must be nonnegative");
    XPolynomial out;
    const Rational m_fact = Rational::factorial(static_cast<unsigned>(m));
    for (int l = 1; 2 * l <= m + 2; ++l) {
        const int total = m - l + 2;
        for (const Profile& p : profiles_with_sum(total, l)) {
            if (static_cast<int>(p.length()) != l) continue;
            Rational c = Rational(p.product()) / Rational(aut_count(p)) / Rational::factorial(static_cast<unsigned>(total));
            if (!normalized) c *= m_fact;
            out.add(p, c);
        }
    }
    return out;
}

/// Coefficient of z^{2g} in (prod k_i / K!) S(z)^{K-1} prod S(k_i z), K = sum k_i.
inline Rational rho(int g, const Profile& p) {
    if (g < 0) throw ConstraintError("rho: genus must be nonnegative");
    if (p.empty()) throw ConstraintError("rho: profile must be nonempty");
    const auto order = static_cast<std::size_t>(2 * g + 2);
    const PowerSeries s = s_series(order);
    PowerSeries series = s.pow(static_cast<unsigned>(p.sum() - 1));
    for (int k : p.parts()) series = series * series_scale_arg(s, k);
    return series.coeff(static_cast<std::size_t>(2 * g)) * Rational(p.product()) /
           Rational::factorial(static_cast<unsigned>(p.sum()));
}

/// Completed (m+1)-cycle: C_p gets rho(g, p) / |Aut p| where
/// sum p + l + 2g - 2 = m.
inline CycleExpr completed_cycle(int m) {
    if (m < 0) throw ConstraintError("completed_cycle: m must be nonnegative");
    CycleExpr out;
    for (int total = 1; total <= m + 1; ++total)
        for (const Profile& p : profiles_with_sum(total, 1)) {
            const int twice_g = m + 2 - p.order();
            if (twice_g < 0 || twice_g % 2 != 0) continue;
            out.add(p, rho(twice_g / 2, p) / Rational(aut_count(p)));
        }
    return out;
}

/// Terms of maximal order m + 2 (the genus-0 part of the completed (m+1)-cycle).
inline CycleExpr genus0_part(const CycleExpr& c, int m) {
    CycleExpr out;
    for (const auto& [p, coeff] : c.terms())
        if (p.order() == m + 2) out.add(p, coeff);
    return out;
}

}  // namespace singclass
