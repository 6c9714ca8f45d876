#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cabletract {

struct Vec2 {
    double x = 0, y = 0;
    bool operator==(const Vec2&) const = default;
};

using Ring = std::vector<Vec2>;  // open ring, no repeated closing vertex

enum class FieldClass { Rectangle, LShape, IrregularConvex, IrregularConcave, RealShape };
std::string to_string(FieldClass c);
FieldClass parse_field_class(const std::string& s);

struct FieldPolygon {
    std::string id;
    FieldClass cls = FieldClass::Rectangle;
    Ring outer;               // counter-clockwise
    std::vector<Ring> holes;  // clockwise, strictly inside
};

double ring_signed_area(const Ring& r);
double polygon_area(const FieldPolygon& p);
Vec2 centroid(const FieldPolygon& p);

/// Throws DomainError unless the polygon is simple, correctly oriented, holes inside, area > 0.
void validate(const FieldPolygon& p);

FieldPolygon rotate(const FieldPolygon& p, double angle_rad, Vec2 about = {0, 0});
FieldPolygon translate(const FieldPolygon& p, Vec2 d);

struct Rect {
    double xmin, ymin, xmax, ymax;
};
Rect bounds(const FieldPolygon& p);

/// Connected components of p intersected with an axis-aligned rectangle.
std::vector<FieldPolygon> clip_to_rect(const FieldPolygon& p, const Rect& r);

constexpr int kCorpusSize = 50;


std::vector<FieldPolygon> generate_corpus(std::uint64_t seed);
std::vector<FieldPolygon> load_real_shapes(const std::string& path = "");
const FieldPolygon& find_field(const std::vector<FieldPolygon>& fields, const std::string& id);

/// GeoJSON FeatureCollection text (properties id, class; holes as interior rings).
std::string to_geojson(const std::vector<FieldPolygon>& fields);

}  // namespace cabletract
