#pragma once

#include <string>
#include <vector>

#include "cabletract/climate.hpp"

namespace cabletract {

struct PowerPlant {
    double pv_area_m2 = 15.0;
    double pv_eff = 0.20;
    double temp_coeff = 0.004;  // per degC above 25
    double derate_a = 0.95;
    double derate_b = 0.96;
    double wind_rated_W = 600.0;
    double swept_area_m2 = 2.0;
    double cp = 0.30;
    double cut_in_ms = 2.5;
    double cut_out_ms = 25.0;
};

struct Battery {
    double capacity_kWh = 9.0;
    double charge_eff = 0.96;
    double discharge_eff = 0.96;
    double power_limit_W = 5000.0;
    double soc_min = 0.10;
    double soc_max = 0.95;
    double soc = 0.525;  // initial state, mid-band
};

/// Operating draw in a fixed daily window, idle draw otherwise.
struct DutyCycle {
    double operating_W = 2000.0;
    int start_hour = 9;
    int end_hour = 15;  // exclusive
    double idle_W = 50.0;

    double load_W(int hour_of_day) const;
    double daily_load_Wh() const;
};

struct HourlyLedger {
    std::vector<double> pv_W, wind_W, batt_in_W, batt_out_W, soc, grid_W, load_W, curtailed_W;

    std::size_t size() const { return load_W.size(); }
    int grid_hours() const;
    double grid_kWh() const;
    double harvest_kWh() const;  // pv + wind before curtailment
};

double cell_temperature(double air_C, double ghi_W_m2);
double pv_power(double ghi_W_m2, double cell_temp_C, const PowerPlant& plant);
double wind_power(double v_ms, const PowerPlant& plant, double air_density = 1.225);

HourlyLedger simulate_year(const HourlyWeather& weather, const PowerPlant& plant, Battery battery,
                           const DutyCycle& duty);

struct CoverageStats {
    std::vector<double> decares_per_day;  // 365 entries
    double p10 = 0, p50 = 0, p90 = 0;
};

/// Load served from harvest and battery per day (grid excluded) over the energy intensity.
CoverageStats daily_coverage_stats(const HourlyLedger& ledger, double energy_Wh_per_decare);

/// First day (0-based) of the 7-day window with the highest GHI sum.
int brightest_week_start(const HourlyWeather& weather);
double grid_kWh_in_days(const HourlyLedger& ledger, int first_day, int n_days);

struct FeasibilityMap {
    std::vector<double> panel_m2;
    std::vector<double> battery_kWh;
    std::vector<std::vector<int>> grid_hours;  // [panel][battery]

    int minimum() const;
};

FeasibilityMap feasibility_map(const HourlyWeather& weather, const std::vector<double>& panel_m2,
                               const std::vector<double>& battery_kWh, const DutyCycle& duty,
                               const PowerPlant& plant = {}, const Battery& battery = {});

std::vector<double> linspace(double lo, double hi, int n);

}  // namespace cabletract
