#pragma once

#include <string>
#include <vector>

namespace cabletract {

struct CableSpec {
    std::string name;
    double diameter_mm = 0;
    double linear_weight_N_per_m = 0;
    double min_breaking_load_N = 0;
};

/// Loads data/cable_props.csv.
std::vector<CableSpec> load_cables(const std::string& path = "");
const CableSpec& find_cable(const std::vector<CableSpec>& cables, const std::string& name);

struct DrivetrainChain {
    double motor_eff = 0.85;
    double inverter_eff = 0.92;
    double gearbox_eff = 0.88;
    double drum_eff = 0.88;
    double pulley_eff = 0.90;
    double cable_eff = 0.92;

    static DrivetrainChain baseline() { return {}; }
    static DrivetrainChain premium() { return {0.93, 0.96, 0.95, 0.95, 0.95, 0.97}; }
};

double chain_efficiency(const DrivetrainChain& c);

struct AnchorEnvelope {
    double per_auger_capacity_N = 400.0;
    double safety_factor = 1.15;
    int installed_augers = 9;
};

/// Exact midspan sag a(cosh(L/2a) - 1), a = T_h / w. Returns +inf when L/2a > 30.
double catenary_sag_exact(double w, double L, double T_h);
double catenary_sag_parabolic(double w, double L, double T_h);

/// Smallest horizontal tension whose exact sag is within the budget (bisection).
double min_tension_for_sag(double w, double L, double sag_budget);

enum class Regime { DraftBound, SagBound };

struct TensionBalance {
    Regime regime;
    double main_tension_N;
    double anchor_tension_N;
};

TensionBalance tension_balance(double draft_N, const CableSpec& cable, double L,
                               double pulley_height_m, double clearance_min_m);

int augers_required(double reaction_N, double per_auger_capacity_N, double safety_factor);

/// P = F v / eta with v in km/h.
double motor_power(double force_N, double speed_kmh, double eta);

double regen_energy(double mass_kg, double slope_rad, double distance_m, double eta_regen = 0.55,
                    double mu_r = 0.06);

constexpr double kGravity = 9.81;

// Reference rigging: 1.5 m of sag budget between the pulley and the crop clearance line.
constexpr double kPulleyHeightM = 2.0;
constexpr double kClearanceMinM = 0.5;

}  // namespace cabletract
