#pragma once

#include <vector>

#include "cabletract/core.hpp"
#include "cabletract/fields.hpp"

namespace cabletract {

struct StripPiece {
    FieldPolygon polygon;  // in the rotated strip frame
    double bounds_length_m;
};

struct Strip {
    int index;
    std::vector<StripPiece> pieces;
};

struct StripPlan {
    std::string field_id;
    double orientation_deg = 0;
    std::vector<Strip> strips;
    int anchor_placements = 0;
    double eta = 0;
    double swept_area_m2 = 0;
    double field_area_m2 = 0;
};

StripPlan decompose(const FieldPolygon& field, double span_m, double swath_m, double orientation_deg);

constexpr int kOrientations = 12;
constexpr double kOrientationStepDeg = 15.0;

StripPlan best_orientation(const FieldPolygon& field, double span_m, double swath_m);

/// A farm member: a corpus field placed at an offset in a shared frame.
struct FarmField {
    FieldPolygon field;
    Vec2 offset;
};

std::vector<FarmField> load_farm(const std::vector<FieldPolygon>& corpus, const std::string& path = "");

struct TimeBudget {
    double operating_h = 0;
    double setup_h = 0;
    double travel_h = 0;
};

constexpr double kTransportSpeedKmh = 5.0;

/// Forward-leg time over every swept round, one setup per anchor placement, and the
/// centroid-to-centroid path between fields in listed order.
TimeBudget farm_time_budget(const std::vector<FarmField>& farm, const ScenarioParams& p);

}  // namespace cabletract
