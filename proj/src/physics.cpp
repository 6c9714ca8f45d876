#include "cabletract/physics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cabletract/io.hpp"

namespace cabletract {

std::vector<CableSpec> load_cables(const std::string& path) {
    const CsvTable t = read_csv(path.empty() ? data_path("cable_props.csv") : path);
    std::vector<CableSpec> out;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        CableSpec c{t.at(i, "name"), t.num(i, "diameter_mm"), t.num(i, "linear_weight_N_per_m"),
                    t.num(i, "mbl_N")};
        if (!(c.linear_weight_N_per_m > 0) || !(c.min_breaking_load_N > 0))
            throw DomainError("cable " + c.name + ": w and MBL must be > 0");
        out.push_back(c);
    }
    return out;
}

const CableSpec& find_cable(const std::vector<CableSpec>& cables, const std::string& name) {
    for (const auto& c : cables)
        if (c.name == name) return c;
    throw DomainError("unknown cable '" + name + "'");
}

double chain_efficiency(const DrivetrainChain& c) {
    return c.motor_eff * c.inverter_eff * c.gearbox_eff * c.drum_eff * c.pulley_eff * c.cable_eff;
}

double catenary_sag_exact(double w, double L, double T_h) {
    if (!(T_h > 0)) throw DomainError("tension must be > 0");
    if (w < 0 || L < 0) throw DomainError("weight and span must be >= 0");
    if (w == 0 || L == 0) return 0.0;
    const double a = T_h / w;
    const double x = L / (2.0 * a);
    if (x > 30.0) return std::numeric_limits<double>::infinity();
    // a(cosh x - 1) = 2a sinh^2(x/2), stable for small x
    const double s = std::sinh(0.5 * x);
    return 2.0 * a * s * s;
}

double catenary_sag_parabolic(double w, double L, double T_h) {
    if (!(T_h > 0)) throw DomainError("tension must be > 0");
    return w * L * L / (8.0 * T_h);
}

double min_tension_for_sag(double w, double L, double sag_budget) {
    if (!(sag_budget > 0)) throw DomainError("sag budget must be > 0");
    double lo = w * L / 1e6;
    double hi = 1e7;
    if (catenary_sag_exact(w, L, hi) > sag_budget) return hi;
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (catenary_sag_exact(w, L, mid) <= sag_budget)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

TensionBalance tension_balance(double draft_N, const CableSpec& cable, double L,
                               double pulley_height_m, double clearance_min_m) {
    const double budget = pulley_height_m - clearance_min_m;
    if (!(budget > 0)) throw DomainError("pulley height must exceed minimum clearance");
    const double w = cable.linear_weight_N_per_m;
    if (draft_N > 0 && catenary_sag_exact(w, L, draft_N) <= budget)
        return {Regime::DraftBound, draft_N, draft_N};
    const double t = std::max(draft_N, min_tension_for_sag(w, L, budget));
    return {Regime::SagBound, t, t};
}

int augers_required(double reaction_N, double per_auger_capacity_N, double safety_factor) {
    if (!(per_auger_capacity_N > 0)) throw DomainError("auger capacity must be > 0");
    const double n = reaction_N * safety_factor / per_auger_capacity_N;
    // 1800*1.15/400 = 5.175 must not drift to the next integer through rounding noise
    return std::max(0, static_cast<int>(std::ceil(n - 1e-9)));
}

double motor_power(double force_N, double speed_kmh, double eta) {
    if (!(eta > 0 && eta <= 1)) throw DomainError("efficiency must be in (0,1]");
    return force_N * (speed_kmh / 3.6) / eta;
}

double regen_energy(double mass_kg, double slope_rad, double distance_m, double eta_regen,
                    double mu_r) {
    if (distance_m < 0) throw DomainError("distance must be >= 0");
    const double mg = mass_kg * kGravity;
    const double e = eta_regen * (mg * std::sin(slope_rad) - mg * std::cos(slope_rad) * mu_r) * distance_m;
    return std::max(0.0, e);
}

}  // namespace cabletract
