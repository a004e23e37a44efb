#include "logwage/calibration.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace logwage {

namespace {

double relative_gap(double got, double want) {
    return std::fabs(got - want) / std::fabs(want);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) {
        // trim surrounding blanks
        const auto first = field.find_first_not_of(" \t\r");
        const auto last = field.find_last_not_of(" \t\r");
        out.push_back(first == std::string::npos ? std::string()
                                                 : field.substr(first, last - first + 1));
    }
    if (!line.empty() && line.back() == ',') {
        out.emplace_back();
    }
    return out;
}

double parse_number(const std::string& text, const std::string& column, int row) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty()) {
        throw std::runtime_error("income series row " + std::to_string(row) +
                                 ": column '" + column + "' is not numeric: '" + text + "'");
    }
    return value;
}

} // namespace

CalibrationResult calibrate(const CalibrationInput& input) {
    const double median = input.median_income;
    const double mean = input.mean_income;
    if (!(median > 0.0) || !(mean > 0.0)) {
        throw std::domain_error("calibrate: incomes must be positive");
    }
    if (mean < median) {
        throw std::domain_error("calibrate: mean income below median is infeasible "
                                "(mean/median ratio < 1 has no real c)");
    }
    const SkillDistribution& skills = input.skills;

    const double rho = mean / median;
    const double c = std::sqrt(std::log(rho) / (0.5 * skills.sigma * skills.sigma));
    const double b = std::log(median) - c * skills.mu;
    Technology tech = Technology::from_log_scale(b, c);

    const IncomeMoments check = income_moments(Economy{tech, skills});
    CalibrationResult result{tech, rho, relative_gap(check.mean, mean),
                             relative_gap(check.median, median), c == 0.0};
    return result;
}

Technology round_coefficients(const Technology& tech) {
    const double b = std::round(tech.b_coef() * 10.0) / 10.0;
    const double c = std::round(tech.c_coef() * 1e4) / 1e4;
    return Technology::from_log_scale(b, c);
}

Technology extrapolate(const Technology& base, const Technology& reference, double periods) {
    if (!(base.c_coef() > 0.0) || !(reference.c_coef() > 0.0)) {
        throw std::domain_error("extrapolate: coefficients must be strictly positive");
    }
    if (!(periods >= 0.0)) {
        throw std::domain_error("extrapolate: periods must be nonnegative");
    }
    const double c = base.c_coef() * std::pow(base.c_coef() / reference.c_coef(), periods);
    const double a = base.a_coef() * std::pow(base.a_coef() / reference.a_coef(), periods);
    return Technology::from_scale(a, c);
}

std::vector<CalibrationInput> load_income_series(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("income series: cannot open '" + path + "'");
    }

    std::string line;
    std::vector<CalibrationInput> out;
    if (!std::getline(in, line)) {
        return out; // empty file, empty series
    }

    const std::vector<std::string> header = split_fields(line);
    const std::vector<std::string> short_schema = {"label", "median", "mean"};
    const std::vector<std::string> long_schema = {"label", "median", "mean", "mu", "sigma"};
    const bool has_skills = header == long_schema;
    if (!has_skills && header != short_schema) {
        throw std::runtime_error("income series: header must be 'label,median,mean' or "
                                 "'label,median,mean,mu,sigma'");
    }

    int row = 0;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue; // blank trailing lines
        }
        ++row;
        const std::vector<std::string> fields = split_fields(line);
        if (fields.size() != header.size()) {
            throw std::runtime_error("income series row " + std::to_string(row) + ": expected " +
                                     std::to_string(header.size()) + " columns, got " +
                                     std::to_string(fields.size()));
        }
        const double median = parse_number(fields[1], "median", row);
        const double mean = parse_number(fields[2], "mean", row);
        double mu = 100.0;
        double sigma = 15.0;
        if (has_skills) {
            mu = parse_number(fields[3], "mu", row);
            sigma = parse_number(fields[4], "sigma", row);
        }
        if (!(median > 0.0) || !(mean > 0.0)) {
            throw std::runtime_error("income series row " + std::to_string(row) +
                                     ": incomes must be positive");
        }
        if (mean < median) {
            throw std::runtime_error("income series row " + std::to_string(row) +
                                     ": mean is below median");
        }
        out.push_back(CalibrationInput{median, mean, SkillDistribution(mu, sigma), fields[0]});
    }
    return out;
}

} // namespace logwage
