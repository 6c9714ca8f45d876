#include "cabletract/powersim.hpp"

#include <algorithm>
#include <cmath>

#include "cabletract/io.hpp"

namespace cabletract {

double DutyCycle::load_W(int h) const {
    return (h >= start_hour && h < end_hour) ? operating_W : idle_W;
}

double DutyCycle::daily_load_Wh() const {
    double s = 0;
    for (int h = 0; h < 24; ++h) s += load_W(h);
    return s;
}

int HourlyLedger::grid_hours() const {
    return static_cast<int>(std::count_if(grid_W.begin(), grid_W.end(), [](double g) { return g > 1e-6; }));
}

double HourlyLedger::grid_kWh() const {
    double s = 0;
    for (double g : grid_W) s += g;
    return s / 1000.0;
}

double HourlyLedger::harvest_kWh() const {
    double s = 0;
    for (std::size_t i = 0; i < size(); ++i) s += pv_W[i] + wind_W[i];
    return s / 1000.0;
}

double cell_temperature(double air_C, double ghi) { return air_C + 0.03 * ghi; }

double pv_power(double ghi, double cell_temp, const PowerPlant& pl) {
    if (ghi < 0) throw DomainError("negative irradiance");
    const double p = ghi * pl.pv_area_m2 * pl.pv_eff * (1.0 - pl.temp_coeff * (cell_temp - 25.0)) *
                     pl.derate_a * pl.derate_b;
    return std::max(0.0, p);
}

double wind_power(double v, const PowerPlant& pl, double rho) {
    if (v < 0) throw DomainError("negative wind speed");
    if (v < pl.cut_in_ms || v > pl.cut_out_ms) return 0.0;
    return std::min(0.5 * rho * pl.swept_area_m2 * v * v * v * pl.cp, pl.wind_rated_W);
}

HourlyLedger simulate_year(const HourlyWeather& w, const PowerPlant& plant, Battery b, const DutyCycle& duty) {
    const std::size_t n = w.ghi_W_m2.size();
    HourlyLedger L;
    for (auto* v : {&L.pv_W, &L.wind_W, &L.batt_in_W, &L.batt_out_W, &L.soc, &L.grid_W, &L.load_W, &L.curtailed_W})
        v->assign(n, 0.0);
    const double cap_Wh = b.capacity_kWh * 1000.0;
    double soc = std::clamp(b.soc, b.soc_min, b.soc_max);
    for (std::size_t i = 0; i < n; ++i) {
        const double pv = pv_power(w.ghi_W_m2[i], cell_temperature(w.temp_C[i], w.ghi_W_m2[i]), plant);
        const double wd = wind_power(w.wind_ms[i], plant);
        const double load = duty.load_W(static_cast<int>(i % 24));
        const double harvest = pv + wd;
        double in = 0, out = 0, grid = 0, curtail = 0;
        if (harvest >= load) {
            const double room = cap_Wh > 0 ? (b.soc_max - soc) * cap_Wh / b.charge_eff : 0.0;
            in = std::min({harvest - load, b.power_limit_W, std::max(0.0, room)});
            curtail = harvest - load - in;
            if (cap_Wh > 0) soc = std::min(b.soc_max, soc + in * b.charge_eff / cap_Wh);
        } else {
            const double deficit = load - harvest;
            const double avail = cap_Wh > 0 ? (soc - b.soc_min) * cap_Wh * b.discharge_eff : 0.0;
            out = std::min({deficit, b.power_limit_W, std::max(0.0, avail)});
            grid = deficit - out;
            if (cap_Wh > 0) soc = std::max(b.soc_min, soc - out / b.discharge_eff / cap_Wh);
        }
        L.pv_W[i] = pv;
        L.wind_W[i] = wd;
        L.batt_in_W[i] = in;
        L.batt_out_W[i] = out;
        L.soc[i] = soc;
        L.grid_W[i] = grid;
        L.load_W[i] = load;
        L.curtailed_W[i] = curtail;
    }
    return L;
}

CoverageStats daily_coverage_stats(const HourlyLedger& L, double intensity) {
    if (!(intensity > 0)) throw DomainError("energy intensity must be positive");
    CoverageStats c;
    const std::size_t days = L.size() / 24;
    c.decares_per_day.resize(days);
    for (std::size_t d = 0; d < days; ++d) {
        double served = 0;
        for (std::size_t h = d * 24; h < d * 24 + 24; ++h) served += L.load_W[h] - L.grid_W[h];
        c.decares_per_day[d] = served / intensity;
    }
    c.p10 = percentile(c.decares_per_day, 0.10);
    c.p50 = percentile(c.decares_per_day, 0.50);
    c.p90 = percentile(c.decares_per_day, 0.90);
    return c;
}

int brightest_week_start(const HourlyWeather& w) {
    const int days = static_cast<int>(w.ghi_W_m2.size() / 24);
    std::vector<double> daily(days, 0.0);
    for (int d = 0; d < days; ++d)
        for (int h = 0; h < 24; ++h) daily[d] += w.ghi_W_m2[d * 24 + h];
    int best = 0;
    double best_sum = -1, run = 0;
    for (int d = 0; d < days; ++d) {
        run += daily[d];
        if (d >= 7) run -= daily[d - 7];
        if (d >= 6 && run > best_sum) {
            best_sum = run;
            best = d - 6;
        }
    }
    return best;
}

double grid_kWh_in_days(const HourlyLedger& L, int first_day, int n_days) {
    double s = 0;
    for (int h = first_day * 24; h < (first_day + n_days) * 24 && h < static_cast<int>(L.size()); ++h)
        s += L.grid_W[h];
    return s / 1000.0;
}

int FeasibilityMap::minimum() const {
    int m = grid_hours.empty() ? 0 : grid_hours[0][0];
    for (const auto& r : grid_hours)
        for (int v : r) m = std::min(m, v);
    return m;
}

FeasibilityMap feasibility_map(const HourlyWeather& w, const std::vector<double>& panels,
                               const std::vector<double>& batteries, const DutyCycle& duty,
                               const PowerPlant& plant, const Battery& battery) {
    FeasibilityMap m{panels, batteries, {}};
    m.grid_hours.assign(panels.size(), std::vector<int>(batteries.size(), 0));
    for (std::size_t i = 0; i < panels.size(); ++i) {
        PowerPlant pl = plant;
        pl.pv_area_m2 = panels[i];
        for (std::size_t j = 0; j < batteries.size(); ++j) {
            Battery b = battery;
            b.capacity_kWh = batteries[j];
            m.grid_hours[i][j] = simulate_year(w, pl, b, duty).grid_hours();
        }
    }
    return m;
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
    return v;
}

}  // namespace cabletract
