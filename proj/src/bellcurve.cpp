#include "logwage/bellcurve.hpp"

#include <cmath>
#include <stdexcept>

namespace logwage {

namespace {

double half_log_variance(const Economy& econ) {
    const double c = econ.tech.c_coef();
    const double sigma = econ.skills.sigma;
    return 0.5 * c * c * sigma * sigma;
}

// Earnings at the symmetric point mu_i = mu = ln(I): A exp(alpha c ln I + h).
double symmetric_earnings(const Economy& econ, double alpha, double investment) {
    return econ.tech.a_coef() *
           std::exp(alpha * econ.tech.c_coef() * std::log(investment) + half_log_variance(econ));
}

// Private FOC residual at the symmetric point: A c e^h I^(alpha c - 1) - 1.
// The planner version carries an extra alpha on the marginal product.
double symmetric_foc(const Economy& econ, double alpha, double marginal_share,
                     double investment) {
    const double c = econ.tech.c_coef();
    return econ.tech.a_coef() * marginal_share * c * std::exp(half_log_variance(econ)) *
               std::pow(investment, alpha * c - 1.0) -
           1.0;
}

InvestmentSolution solve_symmetric(const Economy& econ, double alpha, double marginal_share) {
    const double c = econ.tech.c_coef();
    const double h = half_log_variance(econ);
    const double a = econ.tech.a_coef();

    if (c == 0.0 || marginal_share == 0.0) {
        // investment never moves earnings; all value sits at I -> 0+
        return InvestmentSolution{0.0, InvestmentRegime::BoundaryZero, -1.0, a * std::exp(h)};
    }
    if (alpha * c >= 1.0) {
        const double residual = symmetric_foc(econ, alpha, marginal_share, kInvestmentCeiling);
        return InvestmentSolution{kInvestmentCeiling, InvestmentRegime::Unbounded, residual,
                                  symmetric_earnings(econ, alpha, kInvestmentCeiling) -
                                      kInvestmentCeiling};
    }

    const double investment =
        std::pow(a * marginal_share * c * std::exp(h), 1.0 / (1.0 - alpha * c));
    const double residual = symmetric_foc(econ, alpha, marginal_share, investment);
    const double net = symmetric_earnings(econ, alpha, investment) - investment;
    return InvestmentSolution{investment, InvestmentRegime::Interior, residual, net};
}

} // namespace

RentShare::RentShare(double alpha_) : alpha(alpha_) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw std::invalid_argument("RentShare: alpha must lie in [0,1]");
    }
}

InvestmentSolution private_equilibrium(const Economy& econ, const RentShare& rent) {
    return solve_symmetric(econ, rent.alpha, 1.0);
}

InvestmentSolution social_optimum(const Economy& econ, const RentShare& rent) {
    return solve_symmetric(econ, rent.alpha, rent.alpha);
}

double overinvestment_ratio(const Economy& econ, const RentShare& rent) {
    const double c = econ.tech.c_coef();
    if (!(rent.alpha > 0.0)) {
        throw std::domain_error("overinvestment_ratio: undefined at alpha = 0");
    }
    if (!(rent.alpha * c < 1.0)) {
        throw std::domain_error("overinvestment_ratio: requires alpha*c < 1");
    }
    const double quotient =
        private_equilibrium(econ, rent).investment / social_optimum(econ, rent).investment;
    const double closed = std::pow(rent.alpha, -1.0 / (1.0 - rent.alpha * c));
    if (std::fabs(quotient - closed) > 1e-10 * closed) {
        throw std::logic_error("overinvestment_ratio: quotient and closed form disagree");
    }
    return quotient;
}

double mean_productivity(const Economy& econ, const RentShare& rent) {
    return std::exp(econ.tech.b_coef() + rent.alpha * econ.tech.c_coef() * econ.skills.mu +
                    half_log_variance(econ));
}

} // namespace logwage
