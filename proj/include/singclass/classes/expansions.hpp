#pragma once

#include "singclass/classes/class_expr.hpp"
#include "singclass/combinatorics/profile.hpp"
#include "singclass/exact/polynomial.hpp"
#include "singclass/parse_error.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace singclass {

namespace detail {

struct RatioTag { static constexpr const char* name = "t"; };

template <class Key, class Value>
class MemoTable {
public:
    template <class Compute>
    Value get(const Key& key, Compute&& compute) {
        {
            std::lock_guard lock(mutex_);
            if (auto it = table_.find(key); it != table_.end()) return it->second;
        }
        Value v = compute();
        std::lock_guard lock(mutex_);
        return table_.try_emplace(key, std::move(v)).first->second;
    }

private:
    std::mutex mutex_;
    std::map<Key, Value> table_;
};

// P_m of the product recursion (the part without a_m), singularity basis.
inline ClassExpr product_remainder(int m) {
    static MemoTable<int, ClassExpr> memo;
    return memo.get(m, [m] {
        ClassExpr p(Basis::singularity, m);
        if (m == 1) return p;
        // new layer: sum over multisets of l >= 2 parts summing to m of prod k / |Aut| i_k
        for (const Profile& k : profiles_with_sum(m, 2)) {
            std::vector<int> leaves;
            for (int part : k.parts()) leaves.push_back(part - 1);
            p.add_term(MarkedTree::star(0, leaves),
                       XiPolynomial(Rational(k.product()) / Rational(aut_count(k))));
        }
        ClassExpr prev = product_remainder(m - 1);
        p.accumulate(prev.times_psi(), Rational(m));
        p.accumulate(prev.times_xi(), Rational(-1));
        return p;
    });
}

}  // namespace detail

/// prod_{r=1}^m (r psi - xi) = a_m + P_m in the singularity basis.
inline ClassExpr theorem1_expansion(int m) {
    if (m < 1) throw ConstraintError("theorem1_expansion: m must be at least 1");
    return ClassExpr::single(Basis::singularity, MarkedTree::stick(m)) + detail::product_remainder(m);
}

/// Coefficients c_{m,0..m} with psi^m = sum_j c_{m,j} xi^{m-j} prod_{r=1}^j (r psi - xi).
inline std::vector<Rational> psi_decomposition(int m) {
    if (m < 0) throw ConstraintError("psi_decomposition: m must be nonnegative");
    // Dehomogenize with t = psi/xi: t^m = sum_j c_j prod_{r<=j} (r t - 1); the
    // j-th product has degree j and leading coefficient j!.
    using T = Polynomial<detail::RatioTag>;
    std::vector<T> falling(static_cast<std::size_t>(m) + 1);
    falling[0] = T(Rational(1));
    for (int j = 1; j <= m; ++j) falling[j] = falling[j - 1] * T{Rational(-1), Rational(j)};
    std::vector<Rational> c(static_cast<std::size_t>(m) + 1);
    T residual = T::monomial(1, static_cast<std::size_t>(m));
    for (int j = m; j >= 0; --j) {
        c[j] = residual.coeff(static_cast<std::size_t>(j)) / falling[j].leading();
        residual -= falling[j] * c[j];
    }
    if (!residual.is_zero()) throw std::logic_error("psi_decomposition: nonzero residual");
    return c;
}

/// psi^m in the singularity basis: sum_j c_{m,j} xi^{m-j} theorem1_expansion(j),
/// where the j = 0 product is the unit class.
inline ClassExpr psi_power_sing(int m) {
    if (m < 0) throw ConstraintError("psi_power_sing: m must be nonnegative");
    static detail::MemoTable<int, ClassExpr> memo;
    return memo.get(m, [m] {
        auto c = psi_decomposition(m);
        ClassExpr out(Basis::singularity, m);
        for (int j = 0; j <= m; ++j) {
            ClassExpr product = j == 0 ? ClassExpr::unit(Basis::singularity) : theorem1_expansion(j);
            out.accumulate(product.times_xi(static_cast<std::size_t>(m - j)), c[j]);
        }
        return out;
    });
}

}  // namespace singclass
