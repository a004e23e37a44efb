#include "logwage/montecarlo.hpp"
#include "logwage/normal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

namespace logwage {

namespace {

constexpr std::uint64_t kChunk = 1 << 16;

// SplitMix64 stream: value k of stream `seed` is finalize(seed + k*golden).
// A pure function of (seed, index), which is what makes chunked parallel
// generation reproducible.
std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double uniform01(std::uint64_t seed, std::uint64_t index) {
    return (static_cast<double>(mix(seed, index) >> 11) + 0.5) * 0x1.0p-53;
}

// Box-Muller from two indexed uniforms; keeps the sampler independent of
// the quantile approximation the analytic paths use.
double normal_draw(std::uint64_t seed, std::uint64_t index) {
    const double u1 = uniform01(seed, 2 * index);
    const double u2 = uniform01(seed, 2 * index + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

struct ChunkSums {
    double wage_sum = 0.0;
    double wage_sq_sum = 0.0;
    double utility_sum = 0.0;
    double utility_sq_sum = 0.0;
    std::uint64_t below = 0;
};

// Type-7 quantile (linear interpolation between order statistics).
double sorted_quantile(const std::vector<double>& sorted, double p) {
    const double h = p * static_cast<double>(sorted.size() - 1);
    const std::size_t k = static_cast<std::size_t>(h);
    if (k + 1 >= sorted.size()) {
        return sorted.back();
    }
    const double frac = h - static_cast<double>(k);
    return sorted[k] + frac * (sorted[k + 1] - sorted[k]);
}

} // namespace

SimulationSummary simulate(const Economy& econ, const SimulationConfig& cfg,
                           std::optional<double> threshold, std::optional<Preference> pref,
                           unsigned workers) {
    if (cfg.n < 1) {
        throw std::invalid_argument("simulate: n must be at least 1");
    }
    const std::uint64_t n = cfg.n;
    const std::uint64_t chunks = (n + kChunk - 1) / kChunk;
    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks));

    const double b = econ.tech.b_coef();
    const double c = econ.tech.c_coef();
    const double mu = econ.skills.mu;
    const double sigma = econ.skills.sigma;
    const double one_less_phi = pref ? 1.0 - pref->phi() : 0.0;

    std::vector<double> wages(n);
    std::vector<ChunkSums> sums(chunks);

    const auto run_chunk = [&](std::uint64_t chunk) {
        const std::uint64_t begin = chunk * kChunk;
        const std::uint64_t end = std::min(begin + kChunk, n);
        ChunkSums s;
        for (std::uint64_t i = begin; i < end; ++i) {
            const double log_wage = b + c * (mu + sigma * normal_draw(cfg.seed, i));
            const double w = std::exp(log_wage);
            wages[i] = w;
            s.wage_sum += w;
            s.wage_sq_sum += w * w;
            if (threshold && w < *threshold) {
                ++s.below;
            }
            if (pref) {
                const double u = one_less_phi == 0.0
                                     ? std::log(w)
                                     : std::exp(one_less_phi * log_wage) / one_less_phi;
                s.utility_sum += u;
                s.utility_sq_sum += u * u;
            }
        }
        sums[chunk] = s;
    };

    if (workers <= 1) {
        for (std::uint64_t chunk = 0; chunk < chunks; ++chunk) {
            run_chunk(chunk);
        }
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t) {
            pool.emplace_back([&, t] {
                for (std::uint64_t chunk = t; chunk < chunks; chunk += workers) {
                    run_chunk(chunk);
                }
            });
        }
        for (std::thread& t : pool) {
            t.join();
        }
    }

    // reduce strictly in chunk order
    ChunkSums total;
    for (const ChunkSums& s : sums) {
        total.wage_sum += s.wage_sum;
        total.wage_sq_sum += s.wage_sq_sum;
        total.utility_sum += s.utility_sum;
        total.utility_sq_sum += s.utility_sq_sum;
        total.below += s.below;
    }

    SimulationSummary out;
    const double dn = static_cast<double>(n);
    out.mean = total.wage_sum / dn;
    if (n > 1) {
        const double var =
            std::max(0.0, (total.wage_sq_sum - dn * out.mean * out.mean) / (dn - 1.0));
        out.mean_std_error = std::sqrt(var / dn);
    }

    std::vector<double> sorted = wages;
    std::sort(sorted.begin(), sorted.end());
    for (double p : {0.01, 0.1, 0.25, 0.5, 0.75, 0.9, 0.99}) {
        out.quantiles[p] = sorted_quantile(sorted, p);
    }
    out.median = out.quantiles[0.5];

    if (threshold) {
        out.frac_below = static_cast<double>(total.below) / dn;
    }
    if (pref) {
        const double umean = total.utility_sum / dn;
        out.utility_mean = umean;
        if (n > 1) {
            const double var =
                std::max(0.0, (total.utility_sq_sum - dn * umean * umean) / (dn - 1.0));
            out.utility_std_error = std::sqrt(var / dn);
        } else {
            out.utility_std_error = 0.0;
        }
    }
    return out;
}

LossFraction expost_loss_fraction(const Economy& econ, double investment,
                                  const SimulationConfig& cfg) {
    if (!(investment > 0.0)) {
        throw std::domain_error("expost_loss_fraction: investment must be positive");
    }
    const double c = econ.tech.c_coef();

    double analytic;
    if (c == 0.0) {
        // every wage equals A; the fraction is all-or-nothing
        analytic = econ.tech.a_coef() < investment ? 1.0 : 0.0;
    } else {
        const double z = ((std::log(investment) - econ.tech.b_coef()) / c - econ.skills.mu) /
                         econ.skills.sigma;
        analytic = normal_cdf(z);
    }

    const SimulationSummary sim = simulate(econ, cfg, investment);
    const double std_error =
        std::sqrt(analytic * (1.0 - analytic) / static_cast<double>(cfg.n));
    return LossFraction{analytic, *sim.frac_below, std_error};
}

} // namespace logwage
