#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "logwage/economy.hpp"
#include "logwage/preferences.hpp"

namespace logwage {

struct SimulationConfig {
    std::uint64_t n;
    std::uint64_t seed;
};

struct SimulationSummary {
    double mean = 0.0;
    double median = 0.0;
    double mean_std_error = 0.0;
    std::map<double, double> quantiles; // default probability grid, includes 0.5
    std::optional<double> frac_below;   // present when a threshold was supplied
    std::optional<double> utility_mean; // present when a preference was supplied
    std::optional<double> utility_std_error;
};

// Simulate n agents with skills drawn from N(mu, sigma) and wages mapped
// through the technology.  The draw stream is indexed by (seed, draw index)
// through a counter-based generator, so results are bit-identical for a
// given config regardless of how many worker threads run the chunks.
SimulationSummary simulate(const Economy& econ, const SimulationConfig& cfg,
                           std::optional<double> threshold = std::nullopt,
                           std::optional<Preference> pref = std::nullopt, unsigned workers = 0);

struct LossFraction {
    double analytic;  // P[wage < investment] = Phi((ln(I/A)/c - mu)/sigma)
    double simulated; // fraction of simulated wages below the investment
    double std_error; // binomial standard error at the analytic rate
};

// Ex-post share of agents whose realized wage falls short of the given
// educational investment, by closed form and by simulation.
LossFraction expost_loss_fraction(const Economy& econ, double investment,
                                  const SimulationConfig& cfg);

} // namespace logwage
