#pragma once

#include "singclass/combinatorics/profile.hpp"
#include "singclass/local_models/rational_function.hpp"
#include "singclass/parse_error.hpp"

#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace singclass {

struct ProfileConstants {
    long lcm = 1;             // K
    std::vector<long> ratios;  // r_i = K / k_i
    long components = 1;      // d = prod k_i / K
};

inline ProfileConstants profile_constants(const Profile& p) {
    if (p.empty()) throw ConstraintError("profile_constants: empty profile");
    ProfileConstants out;
    for (int k : p.parts()) out.lcm = std::lcm(out.lcm, static_cast<long>(k));
    for (int k : p.parts()) out.ratios.push_back(out.lcm / k);
    out.components = p.product() / out.lcm;
    return out;
}

/// Orbits of Z/K acting diagonally on Z/k_1 x ... x Z/k_l by adding t to
/// every coordinate, counted by enumeration.
inline long orbit_count(const Profile& p) {
    if (p.empty()) throw ConstraintError("orbit_count: empty profile");
    const auto& ks = p.parts();
    std::set<std::vector<int>> seen;
    long orbits = 0;
    std::vector<int> x(ks.size(), 0);
    while (true) {
        if (!seen.count(x)) {
            ++orbits;
            std::vector<int> y = x;
            while (seen.insert(y).second)
                for (std::size_t i = 0; i < y.size(); ++i) y[i] = (y[i] + 1) % ks[i];
        }
        std::size_t i = 0;
        while (i < x.size() && ++x[i] == ks[i]) x[i++] = 0;
        if (i == x.size()) break;
    }
    return orbits;
}

/// (z - x)^m / prod (z - z_i)^{k_i}, m = sum k_i: poles of order k_i at z_i
/// and a critical point of multiplicity m - 1 at x.
inline RationalFunction canonical_function(const Profile& p, const Rational& x, const std::vector<Rational>& poles) {
    if (poles.size() != p.length())
        throw ConstraintError("canonical_function: " + std::to_string(poles.size()) + " poles for profile " + p.str());
    for (std::size_t i = 0; i < poles.size(); ++i) {
        if (poles[i] == x) throw ConstraintError("canonical_function: pole coincides with the critical point");
        for (std::size_t j = i + 1; j < poles.size(); ++j)
            if (poles[i] == poles[j]) throw ConstraintError("canonical_function: coincident poles");
    }
    const ZPolynomial z = ZPolynomial::variable();
    ZPolynomial num = (z - ZPolynomial(x)).pow(static_cast<unsigned>(p.sum()));
    ZPolynomial den(Rational(1));
    for (std::size_t i = 0; i < poles.size(); ++i)
        den *= (z - ZPolynomial(poles[i])).pow(static_cast<unsigned>(p.parts()[i]));
    return RationalFunction(std::move(num), std::move(den));
}

/// Principal part at one pole: sum_j a_j (u/(z - pole))^{k-j} with a_0 = 1.
/// u is a root of u^k = lead; a_j = scaled[j] * u^j, so the coordinates are
/// exact whether or not u is rational.
struct HurwitzBranch {
    Rational pole;
    int order = 0;                 // k
    Rational lead;                 // u^k, the leading Laurent coefficient
    std::optional<Rational> root;  // u when rational: the real root, positive for even k
    std::vector<Rational> scaled;  // scaled[j] = a_j / u^j, j = 0..k-1

    /// a_j as a rational number; needs a rational root.
    [[nodiscard]] std::optional<Rational> a(int j) const {
        if (!root) return std::nullopt;
        return scaled.at(static_cast<std::size_t>(j)) * root->pow(static_cast<unsigned>(j));
    }
};

struct HurwitzCoordinates {
    std::vector<HurwitzBranch> branches;
    Rational constant;
};

/// Partial-fraction coordinates of f, whose poles must be exactly the given
/// points with the orders in p and whose numerator degree may not exceed the
/// denominator degree.
inline HurwitzCoordinates hurwitz_coordinates(const RationalFunction& f, const Profile& p,
                                              const std::vector<Rational>& poles) {
    if (poles.size() != p.length())
        throw ConstraintError("hurwitz_coordinates: " + std::to_string(poles.size()) + " poles for profile " + p.str());
    const ZPolynomial z = ZPolynomial::variable();
    ZPolynomial expected(Rational(1));
    for (std::size_t i = 0; i < poles.size(); ++i)
        expected *= (z - ZPolynomial(poles[i])).pow(static_cast<unsigned>(p.parts()[i]));
    if (f.denominator() != expected)
        throw ConstraintError("hurwitz_coordinates: pole orders of " + f.str() + " do not match " + p.str());
    const std::size_t num_deg = f.numerator().degree().value_or(0);
    const std::size_t den_deg = *f.denominator().degree();
    if (num_deg > den_deg) throw ConstraintError("hurwitz_coordinates: f has a pole at infinity");

    HurwitzCoordinates out;
    out.constant = num_deg == den_deg && !f.numerator().is_zero() ? f.numerator().leading() : Rational{};
    for (std::size_t i = 0; i < poles.size(); ++i) {
        const int k = p.parts()[i];
        // f = N(w) / (w^k E(w)) with w = z - z_i; expand N/E to order w^{k-1}
        ZPolynomial rest(Rational(1));
        for (std::size_t j = 0; j < poles.size(); ++j)
            if (j != i) rest *= (z - ZPolynomial(poles[j])).pow(static_cast<unsigned>(p.parts()[j]));
        const ZPolynomial n = f.numerator().taylor_shift(poles[i]);
        const ZPolynomial e = rest.taylor_shift(poles[i]);
        std::vector<Rational> c(static_cast<std::size_t>(k));
        for (std::size_t t = 0; t < c.size(); ++t) {
            Rational acc = n.coeff(t);
            for (std::size_t s = 1; s <= t; ++s) acc -= e.coeff(s) * c[t - s];
            c[t] = acc / e.coeff(0);
        }
        if (c[0].is_zero())
            throw ConstraintError("hurwitz_coordinates: pole at " + poles[i].str() + " has order below " +
                                  std::to_string(k));
        HurwitzBranch b{poles[i], k, c[0], rational_root(c[0], static_cast<unsigned>(k)), {}};
        for (const Rational& cj : c) b.scaled.push_back(cj / c[0]);
        out.branches.push_back(std::move(b));
    }
    return out;
}

/// constant + sum_i sum_j a_ij (u_i/(z - z_i))^{k_i - j}.
inline RationalFunction reassemble(const HurwitzCoordinates& h) {
    const ZPolynomial z = ZPolynomial::variable();
    RationalFunction f{ZPolynomial(h.constant)};
    for (const auto& b : h.branches)
        for (int j = 0; j < b.order; ++j) {
            // a_j u^{k-j} = scaled[j] u^j u^{k-j} = scaled[j] * lead
            const Rational c = b.scaled[static_cast<std::size_t>(j)] * b.lead;
            f = f + RationalFunction(ZPolynomial(c), (z - ZPolynomial(b.pole)).pow(static_cast<unsigned>(b.order - j)));
        }
    return f;
}

}  // namespace singclass
