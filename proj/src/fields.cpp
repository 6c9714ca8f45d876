#include "cabletract/fields.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "json.hpp"

#include "cabletract/io.hpp"
#include "geometry_bg.hpp"

namespace cabletract {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHa = 10000.0;

// Generator distributions. Tuned against class-level shape-efficiency statistics at L = 50 m.
constexpr double kStripModule = 50.0;  // rectangle short side snapped to this multiple
constexpr double kRectMinHa = 0.5, kRectMaxHa = 8.0, kRectMaxAspect = 2.7, kRectSkew = 1.5;
constexpr double kLMinHa = 1.2, kLMaxHa = 3.0, kLNotchLo = 0.3, kLNotchHi = 0.6;
constexpr double kConvexRadLo = 0.5;
constexpr double kConvexMinHa = 0.3, kConvexMaxHa = 0.7, kConvexStretch = 1.5;
constexpr double kStarMinHa = 0.35, kStarMaxHa = 1.0, kStarInner = 0.4, kStarStretch = 1.2;
constexpr double kHoleMinR = 5.0, kHoleMaxR = 15.0;
constexpr int kHoleSides = 16;

std::string field_id(int i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "field_%03d", i);
    return buf;
}

Ring scaled_to_area(Ring r, double area_m2) {
    const double k = std::sqrt(area_m2 / std::abs(ring_signed_area(r)));
    for (Vec2& v : r) v = {v.x * k, v.y * k};
    return r;
}

Ring rotated(Ring r, double a) {
    const double c = std::cos(a), s = std::sin(a);
    for (Vec2& v : r) v = {c * v.x - s * v.y, s * v.x + c * v.y};
    return r;
}

// Shift so the bounding box starts at the origin; keeps coordinates tidy in exports.
FieldPolygon normalised(FieldPolygon p) {
    const Rect b = bounds(p);
    return translate(p, {-b.xmin, -b.ymin});
}

FieldPolygon make_rectangle(Rng& g) {
    const double area = (kRectMinHa + (kRectMaxHa - kRectMinHa) * std::pow(uniform01(g), kRectSkew)) * kHa;
    const double aspect = uniform(g, 1.0, kRectMaxAspect);
    const double k = std::max(1.0, std::round(std::sqrt(area / aspect) / kStripModule));
    const double h = k * kStripModule;
    const double w = std::clamp(area / h, h / kRectMaxAspect, h * kRectMaxAspect);
    return {"", FieldClass::Rectangle, {{0, 0}, {w, 0}, {w, h}, {0, h}}, {}};
}

FieldPolygon make_l_shape(Rng& g) {
    const double area = uniform(g, kLMinHa, kLMaxHa) * kHa;
    const double aspect = uniform(g, 1.0, 2.0);
    const double h = std::max(1.0, std::round(std::sqrt(area / aspect) / kStripModule)) * kStripModule;
    const double w = area / h;
    const double fx = uniform(g, kLNotchLo, kLNotchHi), fy = uniform(g, kLNotchLo, kLNotchHi);
    Ring r{{0, 0}, {w, 0}, {w, h * (1 - fy)}, {w * (1 - fx), h * (1 - fy)}, {w * (1 - fx), h}, {0, h}};
    return {"", FieldClass::LShape, r, {}};
}

FieldPolygon make_convex(Rng& g) {
    const int n = 6 + static_cast<int>(g() % 6);
    const double area = uniform(g, kConvexMinHa, kConvexMaxHa) * kHa;
    const double stretch = uniform(g, 1.0, kConvexStretch);
    std::vector<double> ang(n);
    for (double& a : ang) a = uniform(g, 0.0, 2 * kPi);
    std::sort(ang.begin(), ang.end());
    bgx::Polygon pts;
    for (double a : ang) {
        const double rad = uniform(g, kConvexRadLo, 1.0);
        pts.outer().emplace_back(stretch * rad * std::cos(a), rad * std::sin(a));
    }
    bgx::Polygon hull;
    boost::geometry::convex_hull(pts, hull);
    Ring r;
    for (const auto& pt : hull.outer()) r.push_back({pt.x(), pt.y()});
    if (r.size() > 1 && r.front() == r.back()) r.pop_back();
    if (ring_signed_area(r) < 0) std::reverse(r.begin(), r.end());
    r = rotated(scaled_to_area(r, area), uniform(g, 0.0, kPi));
    return {"", FieldClass::IrregularConvex, r, {}};
}

bool hole_fits(const bgx::Polygon& outer, const std::vector<Ring>& holes, Vec2 c, double rad) {
    namespace bg = boost::geometry;
    const bgx::Point pc(c.x, c.y);
    if (!bg::within(pc, outer)) return false;
    if (bg::distance(pc, outer.outer()) < rad + 3.0) return false;
    for (const Ring& h : holes) {
        double hx = 0, hy = 0;
        for (const Vec2& v : h) hx += v.x, hy += v.y;
        hx /= h.size();
        hy /= h.size();
        const double hr = std::hypot(h[0].x - hx, h[0].y - hy);
        if (std::hypot(c.x - hx, c.y - hy) < rad + hr + 3.0) return false;
    }
    return true;
}

Ring circle_cw(Vec2 c, double rad) {
    Ring r;
    for (int k = 0; k < kHoleSides; ++k) {
        const double a = -2 * kPi * k / kHoleSides;
        r.push_back({c.x + rad * std::cos(a), c.y + rad * std::sin(a)});
    }
    return r;
}

FieldPolygon make_star(Rng& g, bool with_holes) {
    const int n = 8 + static_cast<int>(g() % 7);
    const double area = uniform(g, kStarMinHa, kStarMaxHa) * kHa;
    const double stretch = uniform(g, 1.0, kStarStretch);
    Ring r;
    for (int k = 0; k < n; ++k) {
        const double a = 2 * kPi * (k + uniform(g, -0.3, 0.3)) / n;
        const double rad = uniform(g, kStarInner, 1.0);
        r.push_back({stretch * rad * std::cos(a), rad * std::sin(a)});
    }
    r = rotated(scaled_to_area(r, area), uniform(g, 0.0, kPi));
    FieldPolygon p{"", FieldClass::IrregularConcave, r, {}};
    if (with_holes) {
        const int want = 1 + static_cast<int>(g() % 2);
        const bgx::Polygon outer = bgx::to_bg(p);
        const Rect b = bounds(p);
        for (int tries = 0; tries < 200 && static_cast<int>(p.holes.size()) < want; ++tries) {
            const Vec2 c{uniform(g, b.xmin, b.xmax), uniform(g, b.ymin, b.ymax)};
            const double rad = uniform(g, kHoleMinR, kHoleMaxR);
            if (hole_fits(outer, p.holes, c, rad)) p.holes.push_back(circle_cw(c, rad));
        }
    }
    return p;
}

}  // namespace

std::string to_string(FieldClass c) {
    switch (c) {
        case FieldClass::Rectangle: return "rectangle";
        case FieldClass::LShape: return "L_shape";
        case FieldClass::IrregularConvex: return "irregular_convex";
        case FieldClass::IrregularConcave: return "irregular_concave";
        case FieldClass::RealShape: return "real_shape";
    }
    return "?";
}

FieldClass parse_field_class(const std::string& s) {
    for (FieldClass c : {FieldClass::Rectangle, FieldClass::LShape, FieldClass::IrregularConvex,
                         FieldClass::IrregularConcave, FieldClass::RealShape})
        if (to_string(c) == s) return c;
    throw DomainError("unknown field class '" + s + "'");
}

double ring_signed_area(const Ring& r) {
    double s = 0;
    for (std::size_t i = 0, n = r.size(); i < n; ++i) {
        const Vec2& a = r[i];
        const Vec2& b = r[(i + 1) % n];
        s += a.x * b.y - b.x * a.y;
    }
    return 0.5 * s;
}

double polygon_area(const FieldPolygon& p) {
    if (p.outer.size() < 3) throw DomainError("polygon " + p.id + ": outer ring has fewer than 3 vertices");
    double a = std::abs(ring_signed_area(p.outer));
    for (const Ring& h : p.holes) {
        if (h.size() < 3) throw DomainError("polygon " + p.id + ": hole has fewer than 3 vertices");
        a -= std::abs(ring_signed_area(h));
    }
    return a;
}

Vec2 centroid(const FieldPolygon& p) {
    bgx::Point c{0.0, 0.0};
    boost::geometry::centroid(bgx::to_bg(p), c);
    return {c.x(), c.y()};
}

void validate(const FieldPolygon& p) {
    if (p.outer.size() < 3) throw DomainError("polygon " + p.id + ": degenerate outer ring");
    if (ring_signed_area(p.outer) <= 0) throw DomainError("polygon " + p.id + ": outer ring not counter-clockwise");
    for (const Ring& h : p.holes)
        if (h.size() < 3 || ring_signed_area(h) >= 0) throw DomainError("polygon " + p.id + ": hole not clockwise");
    std::string why;
    if (!boost::geometry::is_valid(bgx::to_bg(p), why)) throw DomainError("polygon " + p.id + ": " + why);
    if (!(polygon_area(p) > 0)) throw DomainError("polygon " + p.id + ": non-positive area");
}

FieldPolygon rotate(const FieldPolygon& p, double a, Vec2 about) {
    const double c = std::cos(a), s = std::sin(a);
    auto rot = [&](Ring r) {
        for (Vec2& v : r) {
            const double x = v.x - about.x, y = v.y - about.y;
            v = {about.x + c * x - s * y, about.y + s * x + c * y};
        }
        return r;
    };
    FieldPolygon out = p;
    out.outer = rot(p.outer);
    for (Ring& h : out.holes) h = rot(h);
    return out;
}

FieldPolygon translate(const FieldPolygon& p, Vec2 d) {
    FieldPolygon out = p;
    for (Vec2& v : out.outer) v = {v.x + d.x, v.y + d.y};
    for (Ring& h : out.holes)
        for (Vec2& v : h) v = {v.x + d.x, v.y + d.y};
    return out;
}

Rect bounds(const FieldPolygon& p) {
    Rect r{INFINITY, INFINITY, -INFINITY, -INFINITY};
    for (const Vec2& v : p.outer) {
        r.xmin = std::min(r.xmin, v.x);
        r.ymin = std::min(r.ymin, v.y);
        r.xmax = std::max(r.xmax, v.x);
        r.ymax = std::max(r.ymax, v.y);
    }
    return r;
}

std::vector<FieldPolygon> clip_to_rect(const FieldPolygon& p, const Rect& r) {
    namespace bg = boost::geometry;
    const bgx::Box box(bgx::Point(r.xmin, r.ymin), bgx::Point(r.xmax, r.ymax));
    bgx::MultiPolygon out;
    bg::intersection(bgx::to_bg(p), box, out);
    std::vector<FieldPolygon> pieces;
    for (const auto& poly : out) {
        if (bg::area(poly) <= 1e-9) continue;
        pieces.push_back(bgx::from_bg(poly, p.id, p.cls));
    }
    return pieces;
}

std::vector<FieldPolygon> load_real_shapes(const std::string& path) {
    const CsvTable t = read_csv(path.empty() ? data_path("real_shapes.csv") : path);
    std::vector<FieldPolygon> out;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const std::string& name = t.at(i, "shape");
        if (out.empty() || out.back().id != name) out.push_back({name, FieldClass::RealShape, {}, {}});
        out.back().outer.push_back({t.num(i, "x_m"), t.num(i, "y_m")});
    }
    for (auto& p : out)
        if (ring_signed_area(p.outer) < 0) std::reverse(p.outer.begin(), p.outer.end());
    return out;
}

std::vector<FieldPolygon> generate_corpus(std::uint64_t seed) {
    std::vector<FieldPolygon> out;
    out.reserve(kCorpusSize);
    auto add = [&](FieldPolygon p) {
        p.id = field_id(static_cast<int>(out.size()) + 1);
        p = normalised(std::move(p));
        validate(p);
        out.push_back(std::move(p));
    };
    int idx = 0;
    auto rng = [&] { return Rng(stream_seed(seed, 0x6669656c64ULL + idx++)); };
    for (int i = 0; i < 10; ++i) {
        Rng g = rng();
        add(make_rectangle(g));
    }
    for (int i = 0; i < 10; ++i) {
        Rng g = rng();
        add(make_l_shape(g));
    }
    for (int i = 0; i < 10; ++i) {
        Rng g = rng();
        add(make_convex(g));
    }
    for (int i = 0; i < 15; ++i) {
        Rng g = rng();
        add(make_star(g, i < 10));
    }
    for (FieldPolygon& p : load_real_shapes()) add(std::move(p));
    if (out.size() != kCorpusSize) throw DomainError("real shape file must hold exactly 5 outlines");
    return out;
}

const FieldPolygon& find_field(const std::vector<FieldPolygon>& fields, const std::string& id) {
    for (const auto& f : fields)
        if (f.id == id) return f;
    throw DomainError("unknown field '" + id + "'");
}

std::string to_geojson(const std::vector<FieldPolygon>& fields) {
    using nlohmann::json;
    auto ring_json = [](const Ring& r) {
        json a = json::array();
        for (const Vec2& v : r) a.push_back({v.x, v.y});
        if (!r.empty()) a.push_back({r.front().x, r.front().y});
        return a;
    };
    json fc{{"type", "FeatureCollection"}, {"features", json::array()}};
    for (const auto& f : fields) {
        json coords = json::array({ring_json(f.outer)});
        for (const Ring& h : f.holes) coords.push_back(ring_json(h));
        fc["features"].push_back({{"type", "Feature"},
                                  {"properties", {{"id", f.id}, {"class", to_string(f.cls)}}},
                                  {"geometry", {{"type", "Polygon"}, {"coordinates", coords}}}});
    }
    return fc.dump(1);
}

}  // namespace cabletract
