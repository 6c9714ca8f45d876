#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cabletract/io.hpp"

namespace cabletract {

struct SiteClimate {
    std::string name;
    double latitude_deg = 0;
    double published_ghi_kWh_m2_yr = 0;
    std::array<double, 12> monthly_clearness{};
    std::array<double, 12> monthly_wind_mean_ms{};
    std::array<double, 12> monthly_temp_mean_C{};
};

std::vector<SiteClimate> load_sites(const std::string& path = "");
const SiteClimate& find_site(const std::vector<SiteClimate>& sites, const std::string& name);

constexpr int kHours = 8760;
constexpr int kDays = 365;

struct HourlyWeather {
    std::vector<double> ghi_W_m2;
    std::vector<double> wind_ms;
    std::vector<double> temp_C;

    double annual_ghi_kWh_m2() const;
};

/// Cooper declination (rad) for day of year 1..365.
double solar_declination(int day_of_year);
/// Cosine of the zenith at local solar time hour (fractional, 0..24).
double cos_zenith(double lat_rad, int day_of_year, double solar_hour);
/// Haurwitz clear-sky GHI (W/m2).
double haurwitz_clearsky(double zenith_rad);
int month_of_day(int day_of_year);  // 0..11

/// Daily cloud multiplier, 2 * Beta(4,4) (mean 1).
double cloud_factor(Rng& g);
/// Weibull shape 2 draw with the given mean, by inverse CDF.
double weibull_k2(Rng& g, double mean);

HourlyWeather synthesize_year(const SiteClimate& site, std::uint64_t seed);

constexpr double kSolarConstant = 1361.0;

}  // namespace cabletract
