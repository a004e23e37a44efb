#include "logwage/economy.hpp"
#include "logwage/normal.hpp"

#include <stdexcept>

namespace logwage {

SkillDistribution::SkillDistribution(double mu_, double sigma_) : mu(mu_), sigma(sigma_) {
    if (!std::isfinite(mu)) {
        throw std::invalid_argument("SkillDistribution: mu must be finite");
    }
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw std::invalid_argument("SkillDistribution: sigma must be positive");
    }
}

Technology Technology::from_scale(double a, double c) {
    if (!(a > 0.0) || !std::isfinite(a)) {
        throw std::invalid_argument("Technology: A must be positive");
    }
    if (!(c >= 0.0) || !std::isfinite(c)) {
        throw std::invalid_argument("Technology: c must be nonnegative");
    }
    return Technology(a, std::log(a), c);
}

Technology Technology::from_log_scale(double b, double c) {
    if (!std::isfinite(b)) {
        throw std::invalid_argument("Technology: b must be finite");
    }
    if (!(c >= 0.0) || !std::isfinite(c)) {
        throw std::invalid_argument("Technology: c must be nonnegative");
    }
    return Technology(std::exp(b), b, c);
}

// Wages live on exponential scale; sums of log terms are exponentiated
// last so the tails stay finite for |y - mu| up to many sigma.
double wage(const Economy& econ, double skill) {
    const Technology& t = econ.tech;
    return std::exp(t.b_coef() + t.c_coef() * skill);
}

IncomeMoments income_moments(const Economy& econ) {
    const Technology& t = econ.tech;
    const SkillDistribution& s = econ.skills;
    const double half_var = 0.5 * t.c_coef() * t.c_coef() * s.sigma * s.sigma;
    IncomeMoments m;
    m.median = std::exp(t.b_coef() + t.c_coef() * s.mu);
    m.mean = std::exp(t.b_coef() + t.c_coef() * s.mu + half_var);
    m.rho = std::exp(half_var);
    return m;
}

double marginal_skill_value(const Economy& econ, double iq) {
    const Technology& t = econ.tech;
    const double sigma = econ.skills.sigma;
    const double half_var = 0.5 * t.c_coef() * t.c_coef() * sigma * sigma;
    return std::exp(t.b_coef() + t.c_coef() * iq + half_var) * std::expm1(t.c_coef());
}

double income_quantile(const Economy& econ, double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::domain_error("income_quantile: p must lie in (0,1)");
    }
    const Technology& t = econ.tech;
    const SkillDistribution& s = econ.skills;
    return std::exp(t.b_coef() + t.c_coef() * (s.mu + s.sigma * normal_quantile(p)));
}

} // namespace logwage
