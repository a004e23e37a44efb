#pragma once

#include <optional>

#include "logwage/economy.hpp"

namespace logwage {

// CRRA curvature over consumption, U(C) = C^(1-phi)/(1-phi).
// phi = 1 (log utility) is outside the closed forms and rejected.
class Preference {
public:
    explicit Preference(double phi);
    // Skips validation; exists so tests can exercise the phi = 0 linear
    // limit where expected utility degenerates to expected income.
    static Preference unchecked(double phi);

    double phi() const { return phi_; }

private:
    Preference() = default;
    double phi_ = 0.0;
};

// E[U] = (1/(1-phi)) * exp((1-phi)(c mu + b) + (1-phi)^2 c^2 sigma^2 / 2).
// Positive for phi < 1, negative for phi > 1.
double expected_utility(const Economy& econ, const Preference& pref);

// Technology level maximizing ex-ante expected utility.  Finite plateau
// c* = mu/((phi-1) sigma^2) for phi > 1; nullopt when phi < 1, where more
// technology is always preferred.
std::optional<double> optimal_plateau(const SkillDistribution& skills, const Preference& pref);

// E[U_a]/E[U_b] in closed form; both economies must share the same skill
// distribution.
double utility_ratio(const Economy& econ_a, const Economy& econ_b, const Preference& pref);

// Risk aversion at which an agent is indifferent between the two wage
// distributions; requires c_a != c_b.
double cutoff_risk_aversion(const Economy& econ_a, const Economy& econ_b);

} // namespace logwage
