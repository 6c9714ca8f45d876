#pragma once

#include <string>
#include <vector>

#include "cabletract/fields.hpp"
#include "cabletract/planner.hpp"

namespace cabletract {

struct ContactElement {
    std::string name;
    double load_share;
    double patch_area_m2;
    double track_width_m;
};

enum class CoverageMode { FullField, StripMidline };

struct VehicleFootprint {
    std::string name;
    double total_mass_kg = 0;
    std::vector<ContactElement> elements;
    CoverageMode mode = CoverageMode::FullField;
    double coverage_fraction = 0;  // full-field mode only

    double element_pressure_kPa(std::size_t i) const;
    double mean_pressure_kPa() const;  // load-weighted
    double max_pressure_kPa() const;
    double rolling_width_m() const;    // sum of track widths
};

std::vector<VehicleFootprint> load_footprints(const std::string& path = "");
const VehicleFootprint& find_vehicle(const std::vector<VehicleFootprint>& v, const std::string& name);

struct VehicleMetrics {
    std::string vehicle;
    double compacted_area_m2 = 0;
    double compacted_fraction = 0;  // compacted area / (field area * passes)
    double mean_pressure_kPa = 0;
    double contact_energy_index = 0;  // kPa^2 m^2
};

constexpr int kSeasonPasses = 4;

VehicleMetrics compaction_metrics(const FieldPolygon& field, const VehicleFootprint& vehicle,
                                  const StripPlan* plan, int passes = kSeasonPasses);

struct CompactionReport {
    std::string field_id;
    VehicleMetrics tractor, carriage;
    double area_reduction = 0;          // 1 - carriage/tractor compacted area
    double energy_index_reduction = 0;  // tractor index / carriage index
};

CompactionReport compare(const FieldPolygon& field, const StripPlan& plan, const VehicleFootprint& tractor,
                         const VehicleFootprint& carriage, int passes = kSeasonPasses);

}  // namespace cabletract
