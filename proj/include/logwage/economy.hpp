#pragma once

#include <cmath>

namespace logwage {

// Normal law of skill in the population: y ~ N(mu, sigma).
struct SkillDistribution {
    double mu;
    double sigma;

    SkillDistribution(double mu_, double sigma_);
};

// Wage technology w(y) = A * exp(c*y) with A = exp(b).  A and b are kept
// synchronized at construction; the class is immutable afterwards.
class Technology {
public:
    static Technology from_scale(double a, double c);     // given A
    static Technology from_log_scale(double b, double c); // given b = ln A

    double a_coef() const { return a_; }
    double b_coef() const { return b_; }
    double c_coef() const { return c_; }

private:
    Technology(double a, double b, double c) : a_(a), b_(b), c_(c) {}
    double a_;
    double b_;
    double c_;
};

struct Economy {
    Technology tech;
    SkillDistribution skills;
};

struct IncomeMoments {
    double mean;
    double median;
    double rho; // mean/median
};

// Wage of an agent with skill y: A * exp(c*y).
double wage(const Economy& econ, double skill);

// Closed-form mean, median and mean/median ratio of the wage distribution.
IncomeMoments income_moments(const Economy& econ);

// Expected annual earnings gain from one additional skill point, for an
// agent whose mean skill is iq: A * exp(c*iq + c^2 sigma^2 / 2) * (e^c - 1).
double marginal_skill_value(const Economy& econ, double iq);

// p-quantile of the wage distribution, p in (0,1).
double income_quantile(const Economy& econ, double p);

} // namespace logwage
