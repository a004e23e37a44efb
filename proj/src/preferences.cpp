#include "logwage/preferences.hpp"

#include <cmath>
#include <stdexcept>

namespace logwage {

namespace {

void require_shared_skills(const Economy& a, const Economy& b) {
    if (a.skills.mu != b.skills.mu || a.skills.sigma != b.skills.sigma) {
        throw std::domain_error("economies must share the same skill distribution");
    }
}

} // namespace

Preference::Preference(double phi) : phi_(phi) {
    if (!(phi > 0.0) || !std::isfinite(phi)) {
        throw std::invalid_argument("Preference: phi must be positive");
    }
    if (phi == 1.0) {
        throw std::invalid_argument("Preference: phi = 1 (log utility) is unsupported");
    }
}

Preference Preference::unchecked(double phi) {
    Preference pref;
    pref.phi_ = phi;
    return pref;
}

double expected_utility(const Economy& econ, const Preference& pref) {
    const double one_less_phi = 1.0 - pref.phi();
    const double c = econ.tech.c_coef();
    const double sigma = econ.skills.sigma;
    const double exponent = one_less_phi * (c * econ.skills.mu + econ.tech.b_coef()) +
                            0.5 * one_less_phi * one_less_phi * c * c * sigma * sigma;
    return std::exp(exponent) / one_less_phi;
}

std::optional<double> optimal_plateau(const SkillDistribution& skills, const Preference& pref) {
    if (!(skills.mu > 0.0)) {
        throw std::domain_error("optimal_plateau: requires mu > 0");
    }
    if (pref.phi() < 1.0) {
        return std::nullopt; // more technology always raises expected utility
    }
    // second-order condition (1-phi) sigma^2 < 0 holds whenever phi > 1
    return skills.mu / ((pref.phi() - 1.0) * skills.sigma * skills.sigma);
}

double utility_ratio(const Economy& econ_a, const Economy& econ_b, const Preference& pref) {
    require_shared_skills(econ_a, econ_b);
    const double one_less_phi = 1.0 - pref.phi();
    const double mu = econ_a.skills.mu;
    const double sigma = econ_a.skills.sigma;
    const double ca = econ_a.tech.c_coef();
    const double cb = econ_b.tech.c_coef();
    const double exponent =
        one_less_phi * ((ca - cb) * mu + econ_a.tech.b_coef() - econ_b.tech.b_coef() +
                        0.5 * one_less_phi * (ca * ca - cb * cb) * sigma * sigma);
    return std::exp(exponent);
}

double cutoff_risk_aversion(const Economy& econ_a, const Economy& econ_b) {
    require_shared_skills(econ_a, econ_b);
    const double mu = econ_a.skills.mu;
    const double sigma = econ_a.skills.sigma;
    const double ca = econ_a.tech.c_coef();
    const double cb = econ_b.tech.c_coef();
    if (ca == cb) {
        throw std::domain_error("cutoff_risk_aversion: equal c leaves no finite cutoff");
    }
    const double half_var_diff = 0.5 * (ca * ca - cb * cb) * sigma * sigma;
    return ((ca - cb) * mu + econ_a.tech.b_coef() - econ_b.tech.b_coef() + half_var_diff) /
           half_var_diff;
}

} // namespace logwage
