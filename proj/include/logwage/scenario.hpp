#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "logwage/bellcurve.hpp"
#include "logwage/economy.hpp"
#include "logwage/montecarlo.hpp"
#include "logwage/preferences.hpp"

namespace logwage {

// Built-in coefficient sets: the 1975/2024 US calibrations (coefficients
// quoted at printed precision unless recalibrated from the raw inputs),
// the 2073 forward extrapolation of their change, and a relabeled 2024
// set for runs that cast AI-model training as the investment.
enum class Preset { None, Us1975, Us2024, Us2073, Chatbot };

Preset parse_preset(const std::string& token); // "us1975", "us2024", "us2073", "chatbot"
const char* to_string(Preset preset);

struct Scenario {
    std::string label;
    Economy economy;
    std::optional<Preference> preference;
    std::optional<RentShare> rent;
    std::optional<SimulationConfig> simulation;
    Preset preset = Preset::None;
};

// Raw mean/median income pair behind a calibrated preset, when it has one.
struct PresetInputs {
    double median_income;
    double mean_income;
};
std::optional<PresetInputs> preset_inputs(Preset preset);

// recalibrate=true derives coefficients from the raw income pairs instead
// of the quoted rounded values.
Scenario preset_scenario(Preset preset, bool recalibrate = false);

struct ScenarioParseError : std::runtime_error {
    ScenarioParseError(const std::string& path, int line, const std::string& what);
    int line;
};

// Key-value scenario file with [economy], [skills], [preference], [rent]
// and [simulation] sections.  Unknown sections or keys are errors.
Scenario load_scenario_file(const std::string& path, bool recalibrate = false);

} // namespace logwage
