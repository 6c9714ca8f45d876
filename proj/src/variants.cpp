#include "cabletract/variants.hpp"

#include <algorithm>

#include "cabletract/io.hpp"

namespace cabletract {

std::vector<std::string> variant_names() { return {"baseline", "cabletract_plus", "regen_return"}; }

VariantSpec variant_spec(const std::string& name) {
    if (name == "baseline") return {name, {}};
    if (name == "cabletract_plus") {
        // Corner stations replace the anchor; two cables share the draft, so at the same
        // per-unit motor power the carriage moves 1/0.707 faster.
        return {name,
                {{"setup_time_s", 1.0 - kSetupOverheadReduction},
                 {"draft_load_N", kGeometricLoadSplit},
                 {"operating_speed_kmh", 1.0 / kGeometricLoadSplit},
                 {"strip_width_m", kPlusWidthMultiplier},
                 {"capex.main_unit", kPlusMainUnits},
                 {"capex.anchor", 0.0}}};
    }
    if (name == "regen_return") {
        // Return-leg recovery of 35% of a 50% drivetrain loss.
        return {name, {{"drivetrain_efficiency", 1.0 / (1.0 - kRegenRecovery * 0.5), kRegenEfficiencyCap}}};
    }
    throw DomainError("unknown variant '" + name + "'");
}

ScenarioParams apply_variant(const ScenarioParams& p, const VariantSpec& v) {
    ScenarioParams out = p;
    for (const ParamDelta& d : v.deltas) {
        double x = get_param(out, d.key) * d.factor;
        if (d.cap > 0) x = std::min(x, d.cap);
        set_param(out, d.key, x);
    }
    return out;
}

ScenarioParams invert_variant(const ScenarioParams& p, const VariantSpec& v) {
    ScenarioParams out = p;
    for (auto it = v.deltas.rbegin(); it != v.deltas.rend(); ++it) {
        const double x = get_param(out, it->key);
        if (it->factor == 0.0 || (it->cap > 0 && x >= it->cap))
            throw DomainError("variant edit on '" + it->key + "' is not invertible");
        set_param(out, it->key, x / it->factor);
    }
    return out;
}

std::vector<VariantRow> compare_variants(const ScenarioParams& p) {
    std::vector<VariantRow> rows;
    for (const std::string& n : variant_names()) {
        ScenarioParams q = apply_variant(p, variant_spec(n));
        rows.push_back({n, q, run_single(q)});
    }
    return rows;
}

}  // namespace cabletract
