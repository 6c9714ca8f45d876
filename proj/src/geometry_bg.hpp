#pragma once
// Boost.Geometry adaptors shared by the fields and planner sources.

#include <boost/geometry.hpp>
#include <boost/geometry/geometries/box.hpp>
#include <boost/geometry/geometries/multi_polygon.hpp>
#include <boost/geometry/geometries/point_xy.hpp>
#include <boost/geometry/geometries/polygon.hpp>

#include "cabletract/fields.hpp"

namespace cabletract::bgx {

namespace bg = boost::geometry;
using Point = bg::model::d2::point_xy<double>;
using Polygon = bg::model::polygon<Point, false, false>;  // ccw outer, open rings
using MultiPolygon = bg::model::multi_polygon<Polygon>;
using Box = bg::model::box<Point>;

inline Polygon to_bg(const FieldPolygon& p) {
    Polygon out;
    for (const Vec2& v : p.outer) out.outer().emplace_back(v.x, v.y);
    for (const Ring& h : p.holes) {
        out.inners().emplace_back();
        for (const Vec2& v : h) out.inners().back().emplace_back(v.x, v.y);
    }
    return out;
}

template <class R>
Ring from_bg_ring(const R& r) {
    Ring out;
    for (const auto& pt : r) out.push_back({pt.x(), pt.y()});
    return out;
}

inline FieldPolygon from_bg(const Polygon& p, const std::string& id, FieldClass cls) {
    FieldPolygon out{id, cls, from_bg_ring(p.outer()), {}};
    for (const auto& h : p.inners()) out.holes.push_back(from_bg_ring(h));
    return out;
}

}  // namespace cabletract::bgx
