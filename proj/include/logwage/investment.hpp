#pragma once

#include <vector>

#include "logwage/economy.hpp"

namespace logwage {

// Mapping from educational investment to mean skill, mu(I).  Either the
// log form mu(I) = ln(I) or a tabulated response interpolated by a
// monotone piecewise cubic (Fritsch-Carlson tangents).
class SkillResponse {
public:
    struct Knot {
        double investment;
        double mean_skill;
    };

    static SkillResponse log_response();
    // Knots must be strictly increasing in both coordinates.
    static SkillResponse tabulated(std::vector<Knot> knots);

    bool is_log() const { return knots_.empty(); }
    double domain_lo() const; // exclusive 0 for the log form
    double domain_hi() const; // +inf for the log form

    double mean_skill(double investment) const;
    double derivative(double investment) const;

private:
    SkillResponse() = default;
    std::vector<Knot> knots_;
    std::vector<double> tangents_;
    std::size_t segment(double investment) const;
};

enum class InvestmentRegime {
    Interior,     // stationary interior maximum, FOC holds
    Unbounded,    // objective still increasing at the search ceiling
    BoundaryZero, // objective decreasing at the lower bound
};

struct InvestmentSolution {
    double investment;
    InvestmentRegime regime;
    double foc_residual; // derivative of the objective at `investment`
    double net_value;    // expected earnings minus investment
};

const char* to_string(InvestmentRegime regime);

// Expected earnings net of investment: A*exp(c*mu(i) + c^2 sigma^2/2) - i.
double objective(const Economy& econ, const SkillResponse& resp, double investment);

// Closed form for the log response: I = (A c exp(c^2 sigma^2/2))^(1/(1-c)),
// interior for 0 < c < 1, unbounded for c >= 1.
InvestmentSolution solve_log_form(const Economy& econ);

// Derivative sign scan plus bisection over [lo, hi] for arbitrary responses.
InvestmentSolution solve_general(const Economy& econ, const SkillResponse& resp, double lo,
                                 double hi);

// Median income minus optimal investment under the log response, evaluated
// both directly and through the identity M - I = I*((1/c)exp(-c^2 sigma^2/2) - 1);
// the two routes are cross-checked internally.
double median_gap(const Economy& econ);

// Search ceiling used by the unbounded-regime certificate.
inline constexpr double kInvestmentCeiling = 1e12;

} // namespace logwage
