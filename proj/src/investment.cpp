#include "logwage/investment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace logwage {

namespace {

double half_log_variance(const Economy& econ) {
    const double c = econ.tech.c_coef();
    const double sigma = econ.skills.sigma;
    return 0.5 * c * c * sigma * sigma;
}

// Expected earnings A*exp(c*mu + c^2 sigma^2/2) with the population mean
// skill replaced by the response value mu(i).
double expected_earnings(const Economy& econ, double mean_skill) {
    return std::exp(econ.tech.b_coef() + econ.tech.c_coef() * mean_skill +
                    half_log_variance(econ));
}

double objective_derivative(const Economy& econ, const SkillResponse& resp, double i) {
    return econ.tech.c_coef() * resp.derivative(i) * expected_earnings(econ, resp.mean_skill(i)) -
           1.0;
}

} // namespace

SkillResponse SkillResponse::log_response() {
    return SkillResponse();
}

SkillResponse SkillResponse::tabulated(std::vector<Knot> knots) {
    if (knots.size() < 2) {
        throw std::invalid_argument("SkillResponse: tabulated response needs at least two knots");
    }
    for (std::size_t k = 0; k < knots.size(); ++k) {
        if (!(knots[k].investment > 0.0)) {
            throw std::invalid_argument("SkillResponse: knot investments must be positive");
        }
        if (k > 0 && (!(knots[k].investment > knots[k - 1].investment) ||
                      !(knots[k].mean_skill > knots[k - 1].mean_skill))) {
            throw std::invalid_argument(
                "SkillResponse: knots must be strictly increasing in both coordinates");
        }
    }

    // Fritsch-Carlson monotone tangents: start from averaged secant slopes,
    // then clamp to three times the segment slope.
    const std::size_t n = knots.size();
    std::vector<double> slope(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        slope[k] = (knots[k + 1].mean_skill - knots[k].mean_skill) /
                   (knots[k + 1].investment - knots[k].investment);
    }
    std::vector<double> tangent(n);
    tangent[0] = slope[0];
    tangent[n - 1] = slope[n - 2];
    for (std::size_t k = 1; k + 1 < n; ++k) {
        tangent[k] = 0.5 * (slope[k - 1] + slope[k]);
    }
    for (std::size_t k = 0; k + 1 < n; ++k) {
        tangent[k] = std::min(tangent[k], 3.0 * slope[k]);
        tangent[k + 1] = std::min(tangent[k + 1], 3.0 * slope[k]);
    }

    SkillResponse resp;
    resp.knots_ = std::move(knots);
    resp.tangents_ = std::move(tangent);
    return resp;
}

double SkillResponse::domain_lo() const {
    return is_log() ? 0.0 : knots_.front().investment;
}

double SkillResponse::domain_hi() const {
    return is_log() ? std::numeric_limits<double>::infinity() : knots_.back().investment;
}

std::size_t SkillResponse::segment(double investment) const {
    // half-open segments [x_k, x_{k+1}); the last knot falls to the left segment
    const auto it = std::upper_bound(
        knots_.begin(), knots_.end(), investment,
        [](double value, const Knot& knot) { return value < knot.investment; });
    std::size_t idx = static_cast<std::size_t>(it - knots_.begin());
    if (idx == 0) {
        return 0;
    }
    return std::min(idx - 1, knots_.size() - 2);
}

double SkillResponse::mean_skill(double investment) const {
    if (is_log()) {
        if (!(investment > 0.0)) {
            throw std::domain_error("SkillResponse: log response needs investment > 0");
        }
        return std::log(investment);
    }
    if (!(investment >= domain_lo() && investment <= domain_hi())) {
        throw std::domain_error("SkillResponse: investment outside the tabulated range");
    }
    const std::size_t k = segment(investment);
    const Knot& a = knots_[k];
    const Knot& b = knots_[k + 1];
    const double h = b.investment - a.investment;
    const double t = (investment - a.investment) / h;
    const double t2 = t * t;
    const double t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * a.mean_skill + (t3 - 2 * t2 + t) * h * tangents_[k] +
           (-2 * t3 + 3 * t2) * b.mean_skill + (t3 - t2) * h * tangents_[k + 1];
}

double SkillResponse::derivative(double investment) const {
    if (is_log()) {
        if (!(investment > 0.0)) {
            throw std::domain_error("SkillResponse: log response needs investment > 0");
        }
        return 1.0 / investment;
    }
    if (!(investment >= domain_lo() && investment <= domain_hi())) {
        throw std::domain_error("SkillResponse: investment outside the tabulated range");
    }
    const std::size_t k = segment(investment);
    const Knot& a = knots_[k];
    const Knot& b = knots_[k + 1];
    const double h = b.investment - a.investment;
    const double t = (investment - a.investment) / h;
    const double t2 = t * t;
    return ((6 * t2 - 6 * t) * (a.mean_skill - b.mean_skill) / h +
            (3 * t2 - 4 * t + 1) * tangents_[k] + (3 * t2 - 2 * t) * tangents_[k + 1]);
}

const char* to_string(InvestmentRegime regime) {
    switch (regime) {
    case InvestmentRegime::Interior:
        return "interior";
    case InvestmentRegime::Unbounded:
        return "unbounded";
    case InvestmentRegime::BoundaryZero:
        return "boundary-zero";
    }
    return "?";
}

double objective(const Economy& econ, const SkillResponse& resp, double investment) {
    return expected_earnings(econ, resp.mean_skill(investment)) - investment;
}

InvestmentSolution solve_log_form(const Economy& econ) {
    const double c = econ.tech.c_coef();
    const double h = half_log_variance(econ);
    const double gain = econ.tech.a_coef() * c * std::exp(h);

    if (c == 0.0) {
        // objective degenerates to A - I, supremum at I -> 0+
        return InvestmentSolution{0.0, InvestmentRegime::BoundaryZero, -1.0,
                                  econ.tech.a_coef()};
    }
    if (c >= 1.0) {
        const SkillResponse resp = SkillResponse::log_response();
        const double residual = objective_derivative(econ, resp, kInvestmentCeiling);
        if (residual > 0.0) {
            return InvestmentSolution{kInvestmentCeiling, InvestmentRegime::Unbounded, residual,
                                      objective(econ, resp, kInvestmentCeiling)};
        }
        // c == 1 with A*c*e^h <= 1: earnings grow slower than cost everywhere
        return InvestmentSolution{0.0, InvestmentRegime::BoundaryZero, residual, 0.0};
    }

    const double investment = std::pow(gain, 1.0 / (1.0 - c));
    const double residual = gain * std::pow(investment, c - 1.0) - 1.0;
    const double net = expected_earnings(econ, std::log(investment)) - investment;
    return InvestmentSolution{investment, InvestmentRegime::Interior, residual, net};
}

InvestmentSolution solve_general(const Economy& econ, const SkillResponse& resp, double lo,
                                 double hi) {
    if (!(lo < hi)) {
        throw std::domain_error("solve_general: bounds must satisfy lo < hi");
    }
    if (!(lo >= resp.domain_lo()) || !(lo > 0.0) || !(hi <= resp.domain_hi())) {
        throw std::domain_error("solve_general: bounds outside the response domain");
    }

    const auto deriv = [&](double i) { return objective_derivative(econ, resp, i); };

    // log-spaced derivative sign scan
    constexpr int kGrid = 512;
    const double log_lo = std::log(lo);
    const double step = (std::log(hi) - log_lo) / kGrid;
    std::vector<double> stationary;
    double prev_x = lo;
    double prev_d = deriv(lo);
    for (int k = 1; k <= kGrid; ++k) {
        const double x = k == kGrid ? hi : std::exp(log_lo + step * k);
        const double d = deriv(x);
        if (prev_d > 0.0 && d <= 0.0) {
            // bracketed local maximum, bisect the derivative to the root
            double a = prev_x;
            double b = x;
            for (int it = 0; it < 200 && (b - a) > 1e-15 * b; ++it) {
                const double mid = 0.5 * (a + b);
                (deriv(mid) > 0.0 ? a : b) = mid;
            }
            stationary.push_back(0.5 * (a + b));
        }
        prev_x = x;
        prev_d = d;
    }

    double best = lo;
    double best_value = objective(econ, resp, lo);
    for (double candidate : stationary) {
        const double value = objective(econ, resp, candidate);
        if (value > best_value) {
            best_value = value;
            best = candidate;
        }
    }
    if (objective(econ, resp, hi) > best_value) {
        best_value = objective(econ, resp, hi);
        best = hi;
    }

    const double d_hi = deriv(hi);
    const double d_lo = deriv(lo);
    if (best == hi && d_hi > 0.0) {
        return InvestmentSolution{hi, InvestmentRegime::Unbounded, d_hi, best_value};
    }
    if (best == lo && d_lo < 0.0) {
        return InvestmentSolution{lo, InvestmentRegime::BoundaryZero, d_lo, best_value};
    }
    return InvestmentSolution{best, InvestmentRegime::Interior, deriv(best), best_value};
}

double median_gap(const Economy& econ) {
    const double c = econ.tech.c_coef();
    if (!(c > 0.0) || c >= 1.0) {
        throw std::domain_error("median_gap: interior optimum requires 0 < c < 1");
    }
    const InvestmentSolution sol = solve_log_form(econ);
    const double h = half_log_variance(econ);

    const double median = econ.tech.a_coef() * std::pow(sol.investment, c);
    const double direct = median - sol.investment;
    const double identity = sol.investment * ((1.0 / c) * std::exp(-h) - 1.0);

    const double scale = std::max({1.0, std::fabs(median), sol.investment});
    if (std::fabs(direct - identity) > 1e-10 * scale) {
        throw std::logic_error("median_gap: direct and identity evaluations disagree");
    }
    return direct;
}

} // namespace logwage
