#pragma once

#include "logwage/economy.hpp"
#include "logwage/investment.hpp"

namespace logwage {

// Share of earnings coming from true productivity; the remaining 1 - alpha
// is won by out-competing others for monopoly rents.
struct RentShare {
    double alpha;
    explicit RentShare(double alpha_);
};

// Symmetric Nash investment under the log response: each agent optimizes
// against the population mean skill, so I = (A c exp(c^2 sigma^2/2))^(1/(1-alpha c)).
// Unbounded once alpha*c >= 1.
InvestmentSolution private_equilibrium(const Economy& econ, const RentShare& rent);

// Planner counterpart, internalizing that mean skill moves with everyone's
// investment: I = (A alpha c exp(c^2 sigma^2/2))^(1/(1-alpha c)).
InvestmentSolution social_optimum(const Economy& econ, const RentShare& rent);

// I_priv / I_soc = alpha^(-1/(1-alpha c)) >= 1, equality only at alpha = 1.
double overinvestment_ratio(const Economy& econ, const RentShare& rent);

// Mean labor productivity A*exp(alpha c mu + c^2 sigma^2/2): rent competition
// (lower alpha) drags it down for a given investment level.
double mean_productivity(const Economy& econ, const RentShare& rent);

} // namespace logwage
