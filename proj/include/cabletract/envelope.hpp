#pragma once

#include <optional>
#include <vector>

#include "cabletract/core.hpp"
#include "cabletract/econ.hpp"

namespace cabletract {

constexpr double kHarvestAlpha = 0.169;  // kWh per (m2 of PV * kWh/m2 of GHI)

double linear_harvest_kWh(double pv_area_m2, double ghi_kWh_m2_yr, double alpha = kHarvestAlpha);

/// Worked-area energy plus idle draw over every non-operating hour of the year.
double annual_demand_kWh(const ScenarioParams& p, double farm_ha);

struct EnvelopeCell {
    double ghi_kWh_m2_yr = 0;
    double farm_ha_per_yr = 0;
    double annual_demand_kWh = 0;
    double annual_harvest_kWh = 0;
    double surplus_kWh = 0;
    double grid_share = 0;
    double npv_eur = 0;
    std::optional<double> payback_yr;
};

struct EnvelopeGrid {
    std::vector<double> ghi_axis;
    std::vector<double> farm_axis;
    std::vector<EnvelopeCell> cells;  // ghi-major: cells[i * farm_axis.size() + j]

    const EnvelopeCell& at(std::size_t gi, std::size_t fj) const { return cells[gi * farm_axis.size() + fj]; }
};

EnvelopeCell envelope_cell(const ScenarioParams& p, double ghi, double farm_ha, const DieselReference& ref = {});

EnvelopeGrid sweep(const ScenarioParams& p, double ghi_lo = 800, double ghi_hi = 2300, double farm_lo = 1,
                   double farm_hi = 1000, int n_ghi = 60, int n_farm = 60, const DieselReference& ref = {});

std::vector<double> logspace(double lo, double hi, int n);

}  // namespace cabletract
