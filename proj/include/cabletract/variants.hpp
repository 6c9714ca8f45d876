#pragma once

#include <string>
#include <vector>

#include "cabletract/core.hpp"

namespace cabletract {

/// One field edit: value' = min(value * factor, cap). Keys are core parameter names,
/// including capex.<item>.
struct ParamDelta {
    std::string key;
    double factor = 1.0;
    double cap = 0.0;  // 0 = uncapped
};

struct VariantSpec {
    std::string name;
    std::vector<ParamDelta> deltas;
};

constexpr double kSetupOverheadReduction = 0.6;
constexpr double kGeometricLoadSplit = 0.707;
constexpr double kPlusWidthMultiplier = 1.5;
constexpr double kPlusMainUnits = 4.0;
constexpr double kRegenRecovery = 0.35;
constexpr double kRegenEfficiencyCap = 0.95;

VariantSpec variant_spec(const std::string& name);  // baseline | cabletract_plus | regen_return
std::vector<std::string> variant_names();

ScenarioParams apply_variant(const ScenarioParams& p, const VariantSpec& v);
/// Undoes apply_variant; throws if an edit was capped or zeroed and cannot be undone.
ScenarioParams invert_variant(const ScenarioParams& p, const VariantSpec& v);

struct VariantRow {
    std::string name;
    ScenarioParams params;
    RunResult result;
};

std::vector<VariantRow> compare_variants(const ScenarioParams& p);

}  // namespace cabletract
