#include "cabletract/climate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cabletract/io.hpp"

namespace cabletract {

namespace {

constexpr int kMonthDays[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};

std::uint64_t name_hash(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace

std::vector<SiteClimate> load_sites(const std::string& path) {
    const CsvTable t = read_csv(path.empty() ? data_path("site_meta.csv") : path);
    std::vector<SiteClimate> out;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        SiteClimate s;
        s.name = t.at(i, "name");
        s.latitude_deg = t.num(i, "lat");
        s.published_ghi_kWh_m2_yr = t.num(i, "published_ghi");
        char key[16];
        for (int m = 0; m < 12; ++m) {
            std::snprintf(key, sizeof key, "kt_%02d", m + 1);
            s.monthly_clearness[m] = t.num(i, key);
            std::snprintf(key, sizeof key, "wind_%02d", m + 1);
            s.monthly_wind_mean_ms[m] = t.num(i, key);
            std::snprintf(key, sizeof key, "temp_%02d", m + 1);
            s.monthly_temp_mean_C[m] = t.num(i, key);
            if (!(s.monthly_clearness[m] > 0 && s.monthly_clearness[m] < 1))
                throw DomainError("site " + s.name + ": clearness outside (0,1)");
        }
        if (s.latitude_deg < -90 || s.latitude_deg > 90) throw DomainError("site " + s.name + ": latitude");
        out.push_back(s);
    }
    return out;
}

const SiteClimate& find_site(const std::vector<SiteClimate>& sites, const std::string& name) {
    for (const auto& s : sites)
        if (s.name == name) return s;
    throw DomainError("unknown site '" + name + "'");
}

double HourlyWeather::annual_ghi_kWh_m2() const {
    double s = 0;
    for (double g : ghi_W_m2) s += g;
    return s / 1000.0;
}

double solar_declination(int n) {
    constexpr double deg = std::numbers::pi / 180.0;
    return 23.45 * deg * std::sin(2.0 * std::numbers::pi * (284.0 + n) / 365.0);
}

double cos_zenith(double lat, int n, double solar_hour) {
    const double d = solar_declination(n);
    const double omega = (solar_hour - 12.0) * 15.0 * std::numbers::pi / 180.0;
    return std::sin(lat) * std::sin(d) + std::cos(lat) * std::cos(d) * std::cos(omega);
}

double haurwitz_clearsky(double z) {
    const double c = std::cos(z);
    if (c <= 0.0) return 0.0;
    return 1098.0 * c * std::exp(-0.057 / c);
}

int month_of_day(int n) {
    int m = 0, acc = 0;
    while (m < 11 && n > acc + kMonthDays[m]) acc += kMonthDays[m++];
    return m;
}

// 2 * Beta(4,4): the 4th order statistic of 7 uniforms, doubled.
double cloud_factor(Rng& g) {
    double u[7];
    for (double& x : u) x = uniform01(g);
    std::nth_element(u, u + 3, u + 7);
    return 2.0 * u[3];
}

double weibull_k2(Rng& g, double mean) {
    // lambda = mean / Gamma(1 + 1/k), Gamma(1.5) = sqrt(pi)/2
    const double lambda = mean / (0.5 * std::sqrt(std::numbers::pi));
    const double u = uniform01(g);
    return lambda * std::sqrt(-std::log1p(-u));
}

HourlyWeather synthesize_year(const SiteClimate& site, std::uint64_t seed) {
    HourlyWeather w;
    w.ghi_W_m2.resize(kHours);
    w.wind_ms.resize(kHours);
    w.temp_C.resize(kHours);
    Rng g(stream_seed(seed, name_hash(site.name)));
    const double lat = site.latitude_deg * std::numbers::pi / 180.0;
    for (int day = 1; day <= kDays; ++day) {
        const int m = month_of_day(day);
        const double cloud = cloud_factor(g);
        for (int h = 0; h < 24; ++h) {
            const int i = (day - 1) * 24 + h;
            const double cz = cos_zenith(lat, day, h + 0.5);
            double ghi = 0.0;
            if (cz > 0.0) {
                const double toa = kSolarConstant * cz;
                ghi = std::min(haurwitz_clearsky(std::acos(cz)), toa * site.monthly_clearness[m] * cloud);
            }
            w.ghi_W_m2[i] = ghi;
            w.wind_ms[i] = weibull_k2(g, site.monthly_wind_mean_ms[m]);
            w.temp_C[i] = site.monthly_temp_mean_C[m] +
                          5.0 * std::cos(2.0 * std::numbers::pi * (h + 0.5 - 15.0) / 24.0);
        }
    }
    return w;
}

}  // namespace cabletract
