#pragma once

#include <string>
#include <vector>

#include "logwage/economy.hpp"

namespace logwage {

struct CalibrationInput {
    double median_income;
    double mean_income;
    SkillDistribution skills;
    std::string label;
};

struct CalibrationResult {
    Technology tech;
    double rho;
    double mean_err;   // relative error of the recomputed mean
    double median_err; // relative error of the recomputed median
    bool degenerate;   // mean == median, so c = 0
};

// Recover (A, b, c) from observed median/mean income and the skill law:
//   c = sqrt(ln(mean/median) / (sigma^2/2)),  A = median * exp(-c*mu).
// Throws std::domain_error for nonpositive incomes or mean < median.
CalibrationResult calibrate(const CalibrationInput& input);

// Coefficients rounded to the precision at which they are conventionally
// quoted: b to one decimal (A rederived as e^b), c to four decimals.
Technology round_coefficients(const Technology& tech);

// Multiplicative extrapolation: each coefficient grows by its base/reference
// ratio per period, so periods=1 repeats the base-vs-reference change.
Technology extrapolate(const Technology& base, const Technology& reference, double periods);

// Parse a CSV income series: header `label,median,mean[,mu,sigma]`, one
// calibration input per row.  Skills default to N(100, 15).  Errors carry
// the offending 1-based data row number.
std::vector<CalibrationInput> load_income_series(const std::string& path);

} // namespace logwage
