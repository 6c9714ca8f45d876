#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cabletract {

struct CapexItem {
    std::string name;
    std::int64_t cents;
};

/// Reference scenario. Defaults are the codesigned reference point.
struct ScenarioParams {
    double span_m = 50.0;
    double strip_width_m = 1.5;
    double carriage_load_N = 600.0;
    double draft_load_N = 1800.0;
    double system_travel_load_N = 2200.0;
    double drivetrain_efficiency = 0.50;
    double operating_speed_kmh = 1.5;
    double pv_area_m2 = 15.0;
    double wind_rated_W = 100.0;
    double setup_time_s = 60.0;
    double battery_kWh = 9.0;
    double op_window_h_per_day = 10.0;
    double op_days_per_yr = 170.0;
    double diesel_l_per_decare = 1.2;
    double diesel_price_eur_per_l = 1.40;
    double grid_price_eur_per_kWh = 0.18;
    std::vector<CapexItem> capex_items = default_capex();
    double maintenance_frac_per_yr = 0.04;
    int battery_replacement_yr = 8;
    int horizon_yr = 15;
    double discount_rate = 0.08;
    double operation_time_fraction = 0.8;

    // Closure constants not in the reference table.
    double idle_power_W = 50.0;             // housekeeping draw, also used on the return leg
    double soc_min = 0.10;
    double soc_max = 0.95;
    double solar_power_W_m2 = 161.7;        // PV output per m2 over solar_hours_per_day, reference site
    double solar_hours_per_day = 5.0;
    double wind_capacity_factor = 0.0375;   // reference site, fraction of wind_rated_W
    double shape_efficiency = 1.0;          // cropped / swept area
    double sales_margin_frac = 0.0;

    static std::vector<CapexItem> default_capex();
};

std::int64_t capex_cents(const ScenarioParams& p);
double capex_eur(const ScenarioParams& p);

/// Throws DomainError when a field is outside its valid range.
void validate(const ScenarioParams& p);

/// Reads a flat key=value override file on top of the defaults.
/// Capex items are addressed as capex.<item name>=<EUR>.
ScenarioParams load_params(const std::string& path);
ScenarioParams apply_overrides(ScenarioParams p, const std::string& text);

/// Named numeric access, shared by the override file and the uncertainty problem.
double get_param(const ScenarioParams& p, const std::string& key);
void set_param(ScenarioParams& p, const std::string& key, double value);
std::vector<std::string> param_keys();

struct RoundEnergy {
    double mechanical_J;
    double electrical_J;
};

RoundEnergy round_energy(const ScenarioParams& p);

/// Electrical energy per round (drawn loads plus the idle return leg) over the round area.
double energy_per_decare(const ScenarioParams& p);

struct TimeSplit {
    double usable_s;
    double operating_s;
    double travel_s;
};

TimeSplit daily_time_split(const ScenarioParams& p, double rounds_per_day);

/// Rounds per day when forward legs fill the operating share of usable time.
double time_limited_rounds(const ScenarioParams& p);
double time_limited_decares(const ScenarioParams& p);

/// Battery usable band plus one mean day of harvest at the reference site (kWh).
double daily_energy_budget_kWh(const ScenarioParams& p);
double mean_daily_harvest_kWh(const ScenarioParams& p);

struct RunResult {
    double throughput_decares_per_day = 0;
    double energy_Wh_per_decare = 0;
    double capex_eur = 0;
    double simple_payback_months = 0;
    double surplus_power_W = 0;

    double time_limited_decares = 0;
    double energy_limited_decares = 0;
};

RunResult run_single(const ScenarioParams& p);

constexpr double kDecareM2 = 1000.0;
constexpr double kHoursPerYear = 8760.0;

}  // namespace cabletract
