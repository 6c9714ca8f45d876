#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cabletract/core.hpp"

namespace cabletract {

/// The like-for-like comparator and reference-site context for cash flows.
struct DieselReference {
    double capex_eur = 35000.0;
    double maintenance_frac_per_yr = 0.05;  // fitted; see README
    double reference_ghi_kWh_m2_yr = 1696.0;
};

struct CashflowResult {
    double npv_eur = 0;
    std::optional<double> discounted_payback_yr;
    std::vector<double> annual_net_savings;  // years 1..horizon, battery replacement included
    double capex_delta_eur = 0;
    double annual_savings_eur = 0;           // recurring stream before the battery charge
};

/// Diesel cost avoided + maintenance delta - residual grid cost, per year.
double annual_savings_eur(const ScenarioParams& p, double farm_ha, const DieselReference& ref = {});
double residual_grid_kWh(const ScenarioParams& p, double farm_ha, double ghi_kWh_m2_yr);

CashflowResult npv_vs_diesel(const ScenarioParams& p, double farm_ha, double rate, const DieselReference& ref = {});

/// Discounted cash flow for an arbitrary constant stream; shared by the tornado and envelope layers.
CashflowResult discounted_cashflow(double capex_delta, double annual_savings, double battery_eur, int battery_yr,
                                   int horizon, double rate);

struct FarmSweep {
    std::vector<double> sizes_ha;
    std::vector<double> rates;
    std::vector<std::vector<double>> npv;               // [size][rate]
    std::vector<std::optional<double>> payback_at_ref;  // per size at the reference rate
};

FarmSweep farm_size_sweep(const ScenarioParams& p, const std::vector<double>& sizes = {1, 5, 10, 25, 50, 100},
                          const std::vector<double>& rates = {0.05, 0.08, 0.12}, const DieselReference& ref = {});

struct LcaRow {
    std::string vehicle;
    double embodied_kg_per_ha_yr = 0;
    double operational_kg_per_ha_yr = 0;
    double total() const { return embodied_kg_per_ha_yr + operational_kg_per_ha_yr; }
};

struct LcaResult {
    LcaRow cabletract, diesel, electric;
};

LcaResult lifecycle_co2(const ScenarioParams& p, double farm_ha, const DieselReference& ref = {});

}  // namespace cabletract
