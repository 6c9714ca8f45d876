#include "cabletract/planner.hpp"

#include <cmath>
#include <numbers>

#include "cabletract/io.hpp"

namespace cabletract {

StripPlan decompose(const FieldPolygon& field, double L, double w, double theta_deg) {
    if (!(L > 0) || !(w > 0)) throw DomainError("span and swath must be positive");
    const double area = polygon_area(field);
    if (!(area > 0)) throw DomainError("degenerate polygon " + field.id);
    const FieldPolygon rot = rotate(field, -theta_deg * std::numbers::pi / 180.0);
    const Rect b = bounds(rot);
    const double h = b.ymax - b.ymin;
    // Guard against ceil picking up an extra strip from rounding noise.
    const int n = std::max(1, static_cast<int>(std::ceil(h / L - 1e-9)));

    StripPlan plan;
    plan.field_id = field.id;
    plan.orientation_deg = theta_deg;
    plan.field_area_m2 = area;
    for (int i = 0; i < n; ++i) {
        const Rect r{b.xmin - 1.0, b.ymin + i * L, b.xmax + 1.0, b.ymin + (i + 1) * L};
        Strip s{i, {}};
        for (FieldPolygon& piece : clip_to_rect(rot, r)) {
            const Rect pb = bounds(piece);
            const double len = pb.xmax - pb.xmin;
            plan.swept_area_m2 += L * len;
            s.pieces.push_back({std::move(piece), len});
        }
        plan.anchor_placements += static_cast<int>(s.pieces.size());
        plan.strips.push_back(std::move(s));
    }
    plan.eta = plan.swept_area_m2 > 0 ? std::min(1.0, area / plan.swept_area_m2) : 0.0;
    return plan;
}

StripPlan best_orientation(const FieldPolygon& field, double L, double w) {
    StripPlan best;
    for (int k = 0; k < kOrientations; ++k) {
        StripPlan p = decompose(field, L, w, k * kOrientationStepDeg);
        if (k == 0 || p.eta > best.eta + 1e-12) best = std::move(p);
    }
    return best;
}

std::vector<FarmField> load_farm(const std::vector<FieldPolygon>& corpus, const std::string& path) {
    const CsvTable t = read_csv(path.empty() ? data_path("farm.csv") : path);
    std::vector<FarmField> farm;
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        farm.push_back({find_field(corpus, t.at(i, "field_id")), {t.num(i, "x_offset_m"), t.num(i, "y_offset_m")}});
    return farm;
}

TimeBudget farm_time_budget(const std::vector<FarmField>& farm, const ScenarioParams& p) {
    TimeBudget tb;
    if (farm.empty()) return tb;
    const double v = p.operating_speed_kmh / 3.6;
    double op_s = 0, setup_s = 0;
    std::vector<Vec2> stops;
    for (const FarmField& f : farm) {
        const StripPlan plan = best_orientation(f.field, p.span_m, p.strip_width_m);
        // Each round advances one swath along the strip and pulls the implement across the span.
        const double rounds = plan.swept_area_m2 / (p.span_m * p.strip_width_m);
        op_s += rounds * p.span_m / v;
        setup_s += plan.anchor_placements * p.setup_time_s;
        const Vec2 c = centroid(f.field);
        stops.push_back({c.x + f.offset.x, c.y + f.offset.y});
    }
    double tour_m = 0;
    for (std::size_t i = 1; i < stops.size(); ++i)
        tour_m += std::hypot(stops[i].x - stops[i - 1].x, stops[i].y - stops[i - 1].y);
    tb.operating_h = op_s / 3600.0;
    tb.setup_h = setup_s / 3600.0;
    tb.travel_h = tour_m / (kTransportSpeedKmh / 3.6) / 3600.0;
    return tb;
}

}  // namespace cabletract
