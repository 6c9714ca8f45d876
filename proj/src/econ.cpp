#include "cabletract/econ.hpp"

#include <cmath>
#include <map>

#include "cabletract/envelope.hpp"
#include "cabletract/io.hpp"

namespace cabletract {

namespace {

double battery_capex_eur(const ScenarioParams& p) {
    for (const CapexItem& c : p.capex_items)
        if (c.name == "battery") return c.cents / 100.0;
    return 0.0;
}

std::map<std::string, double> load_intensities() {
    const CsvTable t = read_csv(data_path("bom_co2.csv"));
    std::map<std::string, double> m;
    for (std::size_t i = 0; i < t.rows.size(); ++i) m[t.at(i, "material")] = t.num(i, "kg_co2e_per_unit");
    return m;
}

}  // namespace

double residual_grid_kWh(const ScenarioParams& p, double farm_ha, double ghi) {
    return std::max(0.0, annual_demand_kWh(p, farm_ha) - linear_harvest_kWh(p.pv_area_m2, ghi));
}

double annual_savings_eur(const ScenarioParams& p, double farm_ha, const DieselReference& ref) {
    const double fuel = p.diesel_l_per_decare * 10.0 * farm_ha * p.diesel_price_eur_per_l;
    const double maint = ref.maintenance_frac_per_yr * ref.capex_eur - p.maintenance_frac_per_yr * capex_eur(p);
    const double grid = residual_grid_kWh(p, farm_ha, ref.reference_ghi_kWh_m2_yr) * p.grid_price_eur_per_kWh;
    return fuel + maint - grid;
}

CashflowResult discounted_cashflow(double capex_delta, double savings, double battery_eur, int battery_yr,
                                   int horizon, double rate) {
    if (rate < 0) throw DomainError("discount rate must be non-negative");
    CashflowResult r;
    r.capex_delta_eur = capex_delta;
    r.annual_savings_eur = savings;
    double cum = -capex_delta;
    if (capex_delta <= 0) r.discounted_payback_yr = 0.0;
    for (int t = 1; t <= horizon; ++t) {
        const double flow = savings - (t == battery_yr ? battery_eur : 0.0);
        r.annual_net_savings.push_back(flow);
        const double prev = cum;
        cum += flow / std::pow(1.0 + rate, t);
        if (!r.discounted_payback_yr && prev < 0 && cum >= 0) r.discounted_payback_yr = (t - 1) + (-prev) / (cum - prev);
    }
    r.npv_eur = cum;
    return r;
}

CashflowResult npv_vs_diesel(const ScenarioParams& p, double farm_ha, double rate, const DieselReference& ref) {
    if (!(farm_ha > 0)) throw DomainError("farm size must be positive");
    return discounted_cashflow(capex_eur(p) - ref.capex_eur, annual_savings_eur(p, farm_ha, ref), battery_capex_eur(p),
                               p.battery_replacement_yr, p.horizon_yr, rate);
}

FarmSweep farm_size_sweep(const ScenarioParams& p, const std::vector<double>& sizes, const std::vector<double>& rates,
                          const DieselReference& ref) {
    FarmSweep s{sizes, rates, {}, {}};
    for (double ha : sizes) {
        std::vector<double> row;
        for (double r : rates) row.push_back(npv_vs_diesel(p, ha, r, ref).npv_eur);
        s.npv.push_back(row);
        s.payback_at_ref.push_back(npv_vs_diesel(p, ha, p.discount_rate, ref).discounted_payback_yr);
    }
    return s;
}

LcaResult lifecycle_co2(const ScenarioParams& p, double farm_ha, const DieselReference& ref) {
    if (!(farm_ha > 0)) throw DomainError("farm size must be positive");
    const auto k = load_intensities();
    auto factor = [&](const std::string& m) {
        auto it = k.find(m);
        if (it == k.end()) throw DomainError("no CO2 intensity for '" + m + "'");
        return it->second;
    };
    LcaResult out;
    out.cabletract.vehicle = "cabletract";
    out.diesel.vehicle = "diesel_tractor";
    out.electric.vehicle = "electric_tractor";
    const double ha_yr = farm_ha * p.horizon_yr;
    const CsvTable inv = read_csv(data_path("bom_inventory.csv"));
    for (std::size_t i = 0; i < inv.rows.size(); ++i) {
        const std::string& v = inv.at(i, "vehicle");
        LcaRow* row = v == "cabletract" ? &out.cabletract : v == "diesel_tractor" ? &out.diesel
                    : v == "electric_tractor" ? &out.electric : nullptr;
        if (!row) throw DomainError("unknown vehicle in inventory: " + v);
        const double kg = inv.num(i, "quantity") * factor(inv.at(i, "material"));
        if (inv.at(i, "basis") == "embodied") row->embodied_kg_per_ha_yr += kg / ha_yr;
        else row->operational_kg_per_ha_yr += kg;
    }
    out.diesel.operational_kg_per_ha_yr += p.diesel_l_per_decare * 10.0 * factor("diesel_combustion");
    out.cabletract.operational_kg_per_ha_yr +=
        residual_grid_kWh(p, farm_ha, ref.reference_ghi_kWh_m2_yr) * factor("grid_electricity") / farm_ha;
    return out;
}

}  // namespace cabletract
