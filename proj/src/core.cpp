#include "cabletract/core.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <utility>

#include "cabletract/io.hpp"

namespace cabletract {

std::vector<CapexItem> ScenarioParams::default_capex() {
    return {{"main_unit", 1750000}, {"anchor", 750000},  {"battery", 342000},
            {"pv", 165000},         {"wind", 150000},    {"install", 400000}};
}

std::int64_t capex_cents(const ScenarioParams& p) {
    std::int64_t s = 0;
    for (const auto& it : p.capex_items) s += it.cents;
    return s;
}

double capex_eur(const ScenarioParams& p) { return static_cast<double>(capex_cents(p)) / 100.0; }

namespace {

using Field = double ScenarioParams::*;

const std::vector<std::pair<std::string, Field>>& fields() {
    static const std::vector<std::pair<std::string, Field>> f = {
        {"span_m", &ScenarioParams::span_m},
        {"strip_width_m", &ScenarioParams::strip_width_m},
        {"carriage_load_N", &ScenarioParams::carriage_load_N},
        {"draft_load_N", &ScenarioParams::draft_load_N},
        {"system_travel_load_N", &ScenarioParams::system_travel_load_N},
        {"drivetrain_efficiency", &ScenarioParams::drivetrain_efficiency},
        {"operating_speed_kmh", &ScenarioParams::operating_speed_kmh},
        {"pv_area_m2", &ScenarioParams::pv_area_m2},
        {"wind_rated_W", &ScenarioParams::wind_rated_W},
        {"setup_time_s", &ScenarioParams::setup_time_s},
        {"battery_kWh", &ScenarioParams::battery_kWh},
        {"op_window_h_per_day", &ScenarioParams::op_window_h_per_day},
        {"op_days_per_yr", &ScenarioParams::op_days_per_yr},
        {"diesel_l_per_decare", &ScenarioParams::diesel_l_per_decare},
        {"diesel_price_eur_per_l", &ScenarioParams::diesel_price_eur_per_l},
        {"grid_price_eur_per_kWh", &ScenarioParams::grid_price_eur_per_kWh},
        {"maintenance_frac_per_yr", &ScenarioParams::maintenance_frac_per_yr},
        {"discount_rate", &ScenarioParams::discount_rate},
        {"operation_time_fraction", &ScenarioParams::operation_time_fraction},
        {"idle_power_W", &ScenarioParams::idle_power_W},
        {"soc_min", &ScenarioParams::soc_min},
        {"soc_max", &ScenarioParams::soc_max},
        {"solar_power_W_m2", &ScenarioParams::solar_power_W_m2},
        {"solar_hours_per_day", &ScenarioParams::solar_hours_per_day},
        {"wind_capacity_factor", &ScenarioParams::wind_capacity_factor},
        {"shape_efficiency", &ScenarioParams::shape_efficiency},
        {"sales_margin_frac", &ScenarioParams::sales_margin_frac},
    };
    return f;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

void set_capex_total(ScenarioParams& p, double eur) {
    const std::int64_t target = std::llround(eur * 100.0);
    const std::int64_t old = capex_cents(p);
    if (old <= 0 || p.capex_items.empty()) throw DomainError("capex: no items to scale");
    std::int64_t acc = 0;
    for (std::size_t i = 0; i + 1 < p.capex_items.size(); ++i) {
        auto& c = p.capex_items[i].cents;
        c = std::llround(static_cast<double>(c) * static_cast<double>(target) / static_cast<double>(old));
        acc += c;
    }
    p.capex_items.back().cents = target - acc;
}

}  // namespace

std::vector<std::string> param_keys() {
    std::vector<std::string> k;
    for (const auto& f : fields()) k.push_back(f.first);
    k.push_back("battery_replacement_yr");
    k.push_back("horizon_yr");
    k.push_back("capex_total_eur");
    return k;
}

double get_param(const ScenarioParams& p, const std::string& key) {
    for (const auto& [name, ptr] : fields())
        if (name == key) return p.*ptr;
    if (key == "battery_replacement_yr") return p.battery_replacement_yr;
    if (key == "horizon_yr") return p.horizon_yr;
    if (key == "capex_total_eur") return capex_eur(p);
    if (key.rfind("capex.", 0) == 0)
        for (const auto& it : p.capex_items)
            if (it.name == key.substr(6)) return it.cents / 100.0;
    throw DomainError("unknown parameter '" + key + "'");
}

void set_param(ScenarioParams& p, const std::string& key, double value) {
    for (const auto& [name, ptr] : fields()) {
        if (name == key) {
            p.*ptr = value;
            return;
        }
    }
    if (key == "battery_replacement_yr") {
        p.battery_replacement_yr = static_cast<int>(std::lround(value));
    } else if (key == "horizon_yr") {
        p.horizon_yr = static_cast<int>(std::lround(value));
    } else if (key == "capex_total_eur") {
        set_capex_total(p, value);
    } else if (key.rfind("capex.", 0) == 0) {
        const std::string item = key.substr(6);
        for (auto& it : p.capex_items) {
            if (it.name == item) {
                it.cents = std::llround(value * 100.0);
                return;
            }
        }
        throw DomainError("unknown capex item '" + item + "'");
    } else {
        throw DomainError("unknown parameter '" + key + "'");
    }
}

ScenarioParams apply_overrides(ScenarioParams p, const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw DomainError("params line " + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        char* end = nullptr;
        double v = std::strtod(val.c_str(), &end);
        if (val.empty() || end != val.c_str() + val.size())
            throw DomainError("params line " + std::to_string(lineno) + ": bad number '" + val + "'");
        set_param(p, key, v);
    }
    validate(p);
    return p;
}

ScenarioParams load_params(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open params file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return apply_overrides(ScenarioParams{}, ss.str());
}

void validate(const ScenarioParams& p) {
    auto pos = [](double v, const char* n) {
        if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(n) + " must be > 0");
    };
    auto nonneg = [](double v, const char* n) {
        if (!(v >= 0.0) || !std::isfinite(v)) throw DomainError(std::string(n) + " must be >= 0");
    };
    auto frac = [](double v, const char* n) {
        if (!(v > 0.0 && v <= 1.0)) throw DomainError(std::string(n) + " must be in (0,1]");
    };
    pos(p.span_m, "span_m");
    pos(p.strip_width_m, "strip_width_m");
    nonneg(p.carriage_load_N, "carriage_load_N");
    nonneg(p.draft_load_N, "draft_load_N");
    nonneg(p.system_travel_load_N, "system_travel_load_N");
    frac(p.drivetrain_efficiency, "drivetrain_efficiency");
    pos(p.operating_speed_kmh, "operating_speed_kmh");
    nonneg(p.pv_area_m2, "pv_area_m2");
    nonneg(p.wind_rated_W, "wind_rated_W");
    nonneg(p.setup_time_s, "setup_time_s");
    nonneg(p.battery_kWh, "battery_kWh");
    nonneg(p.op_window_h_per_day, "op_window_h_per_day");
    if (p.op_window_h_per_day > 24.0) throw DomainError("op_window_h_per_day must be <= 24");
    nonneg(p.op_days_per_yr, "op_days_per_yr");
    if (p.op_days_per_yr > 365.0) throw DomainError("op_days_per_yr must be <= 365");
    nonneg(p.diesel_l_per_decare, "diesel_l_per_decare");
    nonneg(p.diesel_price_eur_per_l, "diesel_price_eur_per_l");
    nonneg(p.grid_price_eur_per_kWh, "grid_price_eur_per_kWh");
    nonneg(p.maintenance_frac_per_yr, "maintenance_frac_per_yr");
    nonneg(p.discount_rate, "discount_rate");
    frac(p.operation_time_fraction, "operation_time_fraction");
    frac(p.shape_efficiency, "shape_efficiency");
    nonneg(p.idle_power_W, "idle_power_W");
    nonneg(p.sales_margin_frac, "sales_margin_frac");
    if (!(p.soc_min >= 0.0 && p.soc_min < p.soc_max && p.soc_max <= 1.0))
        throw DomainError("soc band must satisfy 0 <= soc_min < soc_max <= 1");
    if (p.horizon_yr < 1) throw DomainError("horizon_yr must be >= 1");
    if (p.battery_replacement_yr < 0) throw DomainError("battery_replacement_yr must be >= 0");
    for (const auto& it : p.capex_items)
        if (it.cents < 0) throw DomainError("capex item " + it.name + " negative");
}

RoundEnergy round_energy(const ScenarioParams& p) {
    if (!(p.drivetrain_efficiency > 0.0)) throw DomainError("drivetrain efficiency must be > 0");
    const double mech = p.draft_load_N * p.span_m + p.carriage_load_N * p.span_m +
                        p.system_travel_load_N * p.strip_width_m;
    return {mech, mech / p.drivetrain_efficiency};
}

namespace {

double speed_ms(const ScenarioParams& p) { return p.operating_speed_kmh / 3.6; }
double forward_leg_s(const ScenarioParams& p) { return p.span_m / speed_ms(p); }
double round_decares(const ScenarioParams& p) { return p.span_m * p.strip_width_m / kDecareM2; }

}  // namespace

double energy_per_decare(const ScenarioParams& p) {
    const double area = round_decares(p);
    if (!(area > 0.0)) throw DomainError("round area must be > 0");
    if (!(p.operating_speed_kmh > 0.0)) throw DomainError("operating speed must be > 0");
    // Return leg: same duration as the forward leg, idle draw only.
    const double return_J = p.idle_power_W * forward_leg_s(p);
    return (round_energy(p).electrical_J + return_J) / 3600.0 / area;
}

TimeSplit daily_time_split(const ScenarioParams& p, double rounds_per_day) {
    if (rounds_per_day < 0.0) throw DomainError("rounds_per_day must be >= 0");
    const double td = p.op_window_h_per_day * 3600.0;
    const double usable = td - rounds_per_day * p.setup_time_s;
    if (rounds_per_day > 0.0 && usable <= 0.0) throw DomainError("setup time fills the daily window");
    const double ro = p.operation_time_fraction;
    return {usable, ro * usable, (1.0 - ro) * usable};
}

double time_limited_rounds(const ScenarioParams& p) {
    // N * t_fwd = r_o * (T_d - N * t_s)
    const double td = p.op_window_h_per_day * 3600.0;
    const double ro = p.operation_time_fraction;
    return ro * td / (forward_leg_s(p) + ro * p.setup_time_s);
}

double time_limited_decares(const ScenarioParams& p) {
    return time_limited_rounds(p) * round_decares(p);
}

double mean_daily_harvest_kWh(const ScenarioParams& p) {
    const double pv = p.pv_area_m2 * p.solar_power_W_m2 * p.solar_hours_per_day;
    const double wind = p.wind_rated_W * p.wind_capacity_factor * 24.0;
    return (pv + wind) / 1000.0;
}

double daily_energy_budget_kWh(const ScenarioParams& p) {
    return p.battery_kWh * (p.soc_max - p.soc_min) + mean_daily_harvest_kWh(p);
}

RunResult run_single(const ScenarioParams& p) {
    validate(p);
    RunResult r;
    const double e_wh = energy_per_decare(p);
    r.energy_Wh_per_decare = e_wh;
    r.time_limited_decares = time_limited_decares(p);
    r.energy_limited_decares = daily_energy_budget_kWh(p) * 1000.0 / e_wh;
    const double swept = std::min(r.time_limited_decares, r.energy_limited_decares);
    r.throughput_decares_per_day = swept * p.shape_efficiency;
    r.capex_eur = capex_eur(p);

    const double fuel_eur_yr = r.throughput_decares_per_day * p.op_days_per_yr *
                               p.diesel_l_per_decare * p.diesel_price_eur_per_l;
    const double priced_capex = r.capex_eur * (1.0 + p.sales_margin_frac);
    r.simple_payback_months = fuel_eur_yr > 0.0 ? priced_capex / fuel_eur_yr * 12.0
                                                : std::numeric_limits<double>::infinity();

    const double harvest_kWh_yr = mean_daily_harvest_kWh(p) * 365.0;
    const double op_hours = p.op_days_per_yr * p.op_window_h_per_day;
    const double load_kWh_yr = swept * e_wh / 1000.0 * p.op_days_per_yr +
                               p.idle_power_W * (kHoursPerYear - op_hours) / 1000.0;
    r.surplus_power_W = std::max(0.0, (harvest_kWh_yr - load_kWh_yr) * 1000.0 / kHoursPerYear);
    return r;
}

}  // namespace cabletract
