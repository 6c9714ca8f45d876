#include "cabletract/envelope.hpp"

#include <algorithm>
#include <cmath>

#include "cabletract/io.hpp"

namespace cabletract {

double linear_harvest_kWh(double pv_area_m2, double ghi, double alpha) {
    if (pv_area_m2 < 0 || ghi < 0) throw DomainError("harvest inputs must be non-negative");
    return alpha * pv_area_m2 * ghi;
}

double annual_demand_kWh(const ScenarioParams& p, double farm_ha) {
    const double work_kWh = energy_per_decare(p) / 1000.0 * farm_ha * 10.0;
    const double idle_h = std::max(0.0, kHoursPerYear - p.op_days_per_yr * p.op_window_h_per_day);
    return work_kWh + p.idle_power_W * idle_h / 1000.0;
}

EnvelopeCell envelope_cell(const ScenarioParams& p, double ghi, double farm_ha, const DieselReference& ref) {
    EnvelopeCell c;
    c.ghi_kWh_m2_yr = ghi;
    c.farm_ha_per_yr = farm_ha;
    c.annual_demand_kWh = annual_demand_kWh(p, farm_ha);
    c.annual_harvest_kWh = linear_harvest_kWh(p.pv_area_m2, ghi);
    c.surplus_kWh = c.annual_harvest_kWh - c.annual_demand_kWh;
    c.grid_share = c.annual_demand_kWh > 0 ? std::clamp(-c.surplus_kWh / c.annual_demand_kWh, 0.0, 1.0) : 0.0;
    DieselReference local = ref;
    local.reference_ghi_kWh_m2_yr = ghi;
    const CashflowResult cf = npv_vs_diesel(p, farm_ha, p.discount_rate, local);
    c.npv_eur = cf.npv_eur;
    c.payback_yr = cf.discounted_payback_yr;
    return c;
}

std::vector<double> logspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    const double a = std::log10(lo), b = std::log10(hi);
    for (int i = 0; i < n; ++i) v[i] = n == 1 ? lo : std::pow(10.0, a + (b - a) * i / (n - 1));
    return v;
}

EnvelopeGrid sweep(const ScenarioParams& p, double ghi_lo, double ghi_hi, double farm_lo, double farm_hi, int n_ghi,
                   int n_farm, const DieselReference& ref) {
    EnvelopeGrid g;
    g.ghi_axis.resize(n_ghi);
    for (int i = 0; i < n_ghi; ++i) g.ghi_axis[i] = n_ghi == 1 ? ghi_lo : ghi_lo + (ghi_hi - ghi_lo) * i / (n_ghi - 1);
    g.farm_axis = logspace(farm_lo, farm_hi, n_farm);
    g.cells.reserve(static_cast<std::size_t>(n_ghi) * n_farm);
    for (double ghi : g.ghi_axis)
        for (double ha : g.farm_axis) g.cells.push_back(envelope_cell(p, ghi, ha, ref));
    return g;
}

}  // namespace cabletract
