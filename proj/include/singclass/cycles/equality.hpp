#pragma once

#include "singclass/classes/expansions.hpp"
#include "singclass/classes/point_coefficients.hpp"
#include "singclass/cycles/completed_cycles.hpp"

#include <set>
#include <string>
#include <vector>

namespace singclass {

/// One line per genus-0 profile where the completed cycle, the closed formula
/// and the psi^m expansion disagree; empty when they all match.
inline std::vector<std::string> equality1_mismatches(int m) {
    if (m < 1) throw ConstraintError("equality1_check: m must be at least 1");
    const CycleExpr genus0 = genus0_part(completed_cycle(m), m);
    const auto extracted = point_terms(psi_power_sing(m));

    std::set<Profile> profiles;
    for (const auto& [p, c] : genus0.terms()) profiles.insert(p);
    for (const auto& [p, c] : extracted) profiles.insert(p);

    std::vector<std::string> out;
    for (const Profile& p : profiles) {
        const Rational cycle = genus0.coefficient(p);
        const Rational formula = p.order() == m + 2 ? point_coefficient_psi(m, p) : Rational{};
        auto it = extracted.find(p);
        const Rational from_psi = it == extracted.end() ? Rational{} : it->second;
        if (cycle != formula || cycle != from_psi)
            out.push_back("m=" + std::to_string(m) + " k=" + p.str() + ": cycle " + cycle.str() + ", formula " +
                          formula.str() + ", psi^m " + from_psi.str());
    }
    return out;
}

inline bool equality1_check(int m) { return equality1_mismatches(m).empty(); }

}  // namespace singclass
