#include "logwage/scenario.hpp"
#include "logwage/calibration.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace logwage {

namespace {

SkillDistribution default_skills() {
    return SkillDistribution(100.0, 15.0);
}

Technology quoted_or_recalibrated(Preset preset, bool recalibrate) {
    const std::optional<PresetInputs> inputs = preset_inputs(preset);
    if (recalibrate) {
        return calibrate(CalibrationInput{inputs->median_income, inputs->mean_income,
                                          default_skills(), to_string(preset)})
            .tech;
    }
    switch (preset) {
    case Preset::Us1975:
        return Technology::from_log_scale(7.2, 0.0376);
    default:
        return Technology::from_log_scale(5.5, 0.0579);
    }
}

std::string trim(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = text.find_last_not_of(" \t\r");
    return text.substr(first, last - first + 1);
}

std::string unquote(const std::string& text) {
    if (text.size() >= 2 && ((text.front() == '"' && text.back() == '"') ||
                             (text.front() == '\'' && text.back() == '\''))) {
        return text.substr(1, text.size() - 2);
    }
    return text;
}

} // namespace

Preset parse_preset(const std::string& token) {
    if (token == "none") return Preset::None;
    if (token == "us1975" || token == "1975") return Preset::Us1975;
    if (token == "us2024" || token == "2024") return Preset::Us2024;
    if (token == "us2073" || token == "2073") return Preset::Us2073;
    if (token == "chatbot") return Preset::Chatbot;
    throw std::invalid_argument("unknown preset '" + token +
                                "' (expected us1975, us2024, us2073 or chatbot)");
}

const char* to_string(Preset preset) {
    switch (preset) {
    case Preset::None:
        return "none";
    case Preset::Us1975:
        return "us1975";
    case Preset::Us2024:
        return "us2024";
    case Preset::Us2073:
        return "us2073";
    case Preset::Chatbot:
        return "chatbot";
    }
    return "?";
}

std::optional<PresetInputs> preset_inputs(Preset preset) {
    switch (preset) {
    case Preset::Us1975:
        return PresetInputs{58000.0, 68000.0};
    case Preset::Us2024:
    case Preset::Chatbot:
        return PresetInputs{83000.0, 121000.0};
    default:
        return std::nullopt;
    }
}

Scenario preset_scenario(Preset preset, bool recalibrate) {
    Scenario scenario{.label = "",
                      .economy = Economy{Technology::from_scale(1.0, 0.0), default_skills()},
                      .preference = std::nullopt,
                      .rent = std::nullopt,
                      .simulation = std::nullopt,
                      .preset = preset};
    switch (preset) {
    case Preset::None:
        throw std::invalid_argument("preset_scenario: 'none' names no coefficient set");
    case Preset::Us1975:
        scenario.label = "1975";
        scenario.economy.tech = quoted_or_recalibrated(preset, recalibrate);
        break;
    case Preset::Us2024:
        scenario.label = "2024";
        scenario.economy.tech = quoted_or_recalibrated(preset, recalibrate);
        break;
    case Preset::Us2073:
        scenario.label = "2073";
        scenario.economy.tech =
            extrapolate(quoted_or_recalibrated(Preset::Us2024, recalibrate),
                        quoted_or_recalibrated(Preset::Us1975, recalibrate), 1.0);
        break;
    case Preset::Chatbot:
        scenario.label = "chatbot";
        scenario.economy.tech = quoted_or_recalibrated(Preset::Us2024, recalibrate);
        break;
    }
    return scenario;
}

ScenarioParseError::ScenarioParseError(const std::string& path, int line_, const std::string& what)
    : std::runtime_error(path + ":" + std::to_string(line_) + ": " + what), line(line_) {}

Scenario load_scenario_file(const std::string& path, bool recalibrate) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("scenario: cannot open '" + path + "'");
    }

    std::optional<std::string> label;
    std::optional<std::string> preset_token;
    std::optional<double> a_coef, b_coef, c_coef, mu, sigma, phi, alpha;
    std::optional<std::uint64_t> sim_n, sim_seed;

    std::string section;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ScenarioParseError(path, line_no, "malformed section header");
            }
            section = trim(line.substr(1, line.size() - 2));
            if (section != "economy" && section != "skills" && section != "preference" &&
                section != "rent" && section != "simulation") {
                throw ScenarioParseError(path, line_no, "unknown section [" + section + "]");
            }
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ScenarioParseError(path, line_no, "expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = unquote(trim(line.substr(eq + 1)));
        if (value.empty()) {
            throw ScenarioParseError(path, line_no, "empty value for key '" + key + "'");
        }

        const auto number = [&]() {
            std::size_t used = 0;
            double parsed = 0.0;
            try {
                parsed = std::stod(value, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != value.size()) {
                throw ScenarioParseError(path, line_no,
                                         "value for '" + key + "' is not numeric: '" + value + "'");
            }
            return parsed;
        };
        const auto integer = [&]() {
            const double parsed = number();
            if (parsed < 0.0 || parsed != std::floor(parsed)) {
                throw ScenarioParseError(path, line_no,
                                         "value for '" + key + "' must be a nonnegative integer");
            }
            return static_cast<std::uint64_t>(parsed);
        };

        if (section.empty() && key == "label") {
            label = value;
        } else if (section == "economy" && key == "preset") {
            preset_token = value;
        } else if (section == "economy" && key == "a") {
            a_coef = number();
        } else if (section == "economy" && key == "b") {
            b_coef = number();
        } else if (section == "economy" && key == "c") {
            c_coef = number();
        } else if (section == "skills" && key == "mu") {
            mu = number();
        } else if (section == "skills" && key == "sigma") {
            sigma = number();
        } else if (section == "preference" && key == "phi") {
            phi = number();
        } else if (section == "rent" && key == "alpha") {
            alpha = number();
        } else if (section == "simulation" && key == "n") {
            sim_n = integer();
        } else if (section == "simulation" && key == "seed") {
            sim_seed = integer();
        } else {
            throw ScenarioParseError(path, line_no,
                                     "unknown key '" + key + "'" +
                                         (section.empty() ? "" : " in section [" + section + "]"));
        }
    }

    Scenario scenario;
    if (preset_token) {
        if (a_coef || b_coef || c_coef) {
            throw ScenarioParseError(path, line_no,
                                     "[economy] preset and explicit coefficients are exclusive");
        }
        scenario = preset_scenario(parse_preset(*preset_token), recalibrate);
    } else {
        if (!c_coef || (!a_coef && !b_coef)) {
            throw ScenarioParseError(path, line_no,
                                     "[economy] needs 'c' plus 'a' or 'b' (or a preset)");
        }
        if (a_coef && b_coef && std::fabs(*b_coef - std::log(*a_coef)) > 1e-9) {
            throw ScenarioParseError(path, line_no, "[economy] 'a' and 'b' disagree: b != ln(a)");
        }
        scenario.economy.tech = a_coef ? Technology::from_scale(*a_coef, *c_coef)
                                       : Technology::from_log_scale(*b_coef, *c_coef);
        scenario.label = "custom";
    }
    if (mu || sigma) {
        scenario.economy.skills =
            SkillDistribution(mu.value_or(100.0), sigma.value_or(15.0));
    }
    if (label) {
        scenario.label = *label;
    }
    if (phi) {
        scenario.preference = Preference(*phi);
    }
    if (alpha) {
        scenario.rent = RentShare(*alpha);
    }
    if (sim_n || sim_seed) {
        scenario.simulation = SimulationConfig{sim_n.value_or(100000), sim_seed.value_or(1)};
    }
    return scenario;
}

} // namespace logwage
